#pragma once

#include "degseq/graphic.hpp"
#include "degseq/realize.hpp"
#include "degseq/interval.hpp"
#include "degseq/ordering.hpp"
#include "degseq/potential.hpp"
#include "degseq/order_b.hpp"
#include "degseq/forcible.hpp"
#include "degseq/oracle.hpp"
