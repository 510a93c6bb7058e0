#pragma once

// Input and output documents of the degseq tool: instance parsing from JSON
// or the plain "a1,a2,... / b1,b2,..." line format, verdict serialization,
// and the mapping from decisions to exit codes.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "degseq/forcible.hpp"
#include "degseq/graphic.hpp"
#include "degseq/interval.hpp"
#include "degseq/order_b.hpp"
#include "degseq/potential.hpp"

namespace degseq {

using json = nlohmann::json;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InstanceDocument {
    std::optional<std::string> name;
    IntervalInstance instance;
};

enum class InputFormat { automatic, obj, lines };

enum class Mode { forcible, potential, orderB, gy_necessary, gy_sufficient, graphic };

constexpr std::string_view to_string(Mode m) noexcept {
    switch (m) {
    case Mode::forcible: return "forcible";
    case Mode::potential: return "potential";
    case Mode::orderB: return "orderB";
    case Mode::gy_necessary: return "gy-necessary";
    case Mode::gy_sufficient: return "gy-sufficient";
    case Mode::graphic: return "graphic";
    }
    return "?";
}

inline std::optional<Mode> mode_from_string(std::string_view s) noexcept {
    for (auto m : {Mode::forcible, Mode::potential, Mode::orderB, Mode::gy_necessary, Mode::gy_sufficient,
                   Mode::graphic})
        if (to_string(m) == s)
            return m;
    return std::nullopt;
}

/// 0 yes, 1 no, 2 not applicable.
constexpr int exit_code(Decision d) noexcept {
    switch (d) {
    case Decision::yes:
    case Decision::vacuous_yes: return 0;
    case Decision::no: return 1;
    case Decision::not_applicable: return 2;
    }
    return 64;
}

inline constexpr int exit_input_error = 64;

namespace detail {

inline std::vector<degree_t> degrees_from_json(const json& j, std::string_view field) {
    if (!j.is_array())
        throw InputError(std::string(field) + " must be an array of integers");
    std::vector<degree_t> out;
    out.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw InputError(std::string(field) + " contains a non-integer value");
        const auto v = x.get<std::int64_t>();
        if (x.is_number_unsigned() && x.get<std::uint64_t>() > std::numeric_limits<degree_t>::max())
            throw InputError(std::string(field) + " value out of range");
        if (v < 0)
            throw InputError(std::string(field) + " contains a negative value");
        if (v > std::numeric_limits<degree_t>::max())
            throw InputError(std::string(field) + " value out of range");
        out.push_back(static_cast<degree_t>(v));
    }
    return out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

inline std::vector<degree_t> degrees_from_csv(std::string_view s, std::string_view field) {
    std::vector<degree_t> out;
    s = trim(s);
    if (s.empty())
        throw InputError(std::string(field) + " is empty");
    while (true) {
        const auto comma = s.find(',');
        const auto tok = trim(s.substr(0, comma));
        degree_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw InputError(std::string(field) + ": bad integer '" + std::string(tok) + "'");
        if (v < 0)
            throw InputError(std::string(field) + " contains a negative value");
        out.push_back(v);
        if (comma == std::string_view::npos)
            break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

inline IntervalInstance make_instance(std::vector<degree_t> a, std::optional<std::vector<degree_t>> b) {
    try {
        if (!b)
            return IntervalInstance::point(std::move(a));
        return IntervalInstance(std::move(a), std::move(*b));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

} // namespace detail

/// {"a": [...], "b": [...], "name": "..."}; b defaults to a.
inline InstanceDocument instance_from_json(const json& j) {
    if (!j.is_object())
        throw InputError("instance document must be an object");
    if (!j.contains("a"))
        throw InputError("missing field 'a'");
    std::optional<std::string> name;
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw InputError("'name' must be a string");
        name = j["name"].get<std::string>();
    }
    auto a = detail::degrees_from_json(j["a"], "a");
    std::optional<std::vector<degree_t>> b;
    if (j.contains("b") && !j["b"].is_null())
        b = detail::degrees_from_json(j["b"], "b");
    return {std::move(name), detail::make_instance(std::move(a), std::move(b))};
}

/// "a1,a2,... / b1,b2,..." with the "/ b" part optional.
inline InstanceDocument instance_from_line(std::string_view line) {
    const auto slash = line.find('/');
    auto a = detail::degrees_from_csv(line.substr(0, slash), "a");
    std::optional<std::vector<degree_t>> b;
    if (slash != std::string_view::npos)
        b = detail::degrees_from_csv(line.substr(slash + 1), "b");
    return {std::nullopt, detail::make_instance(std::move(a), std::move(b))};
}

inline json to_json(const InstanceDocument& d) {
    json j;
    if (d.name)
        j["name"] = *d.name;
    j["a"] = std::vector<degree_t>(d.instance.lower().begin(), d.instance.lower().end());
    j["b"] = std::vector<degree_t>(d.instance.upper().begin(), d.instance.upper().end());
    return j;
}

/// One parsed record; exactly one of doc / error is meaningful.
struct InputRecord {
    std::size_t record = 0; ///< 1-based record number
    std::optional<InstanceDocument> doc;
    std::string error;
};

/// Parses a whole input text. JSON input may be a single object, an array of
/// objects, or one object per line; the line format takes one instance per
/// non-empty line ('#' starts a comment line).
inline std::vector<InputRecord> parse_documents(std::string_view text, InputFormat fmt = InputFormat::automatic) {
    std::vector<InputRecord> out;
    auto body = detail::trim(text);
    if (fmt == InputFormat::automatic)
        fmt = (!body.empty() && (body.front() == '{' || body.front() == '[')) ? InputFormat::obj : InputFormat::lines;

    auto push = [&](auto&& parse) {
        InputRecord r;
        r.record = out.size() + 1;
        try {
            r.doc = parse();
        } catch (const InputError& e) {
            r.error = e.what();
        }
        out.push_back(std::move(r));
    };

    if (fmt == InputFormat::obj) {
        json whole = json::parse(body.begin(), body.end(), nullptr, false);
        if (!whole.is_discarded()) {
            if (whole.is_array())
                for (const auto& item : whole)
                    push([&] { return instance_from_json(item); });
            else
                push([&] { return instance_from_json(whole); });
            return out;
        }
    }

    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto s = detail::trim(line);
        if (s.empty() || s.front() == '#')
            continue;
        if (fmt == InputFormat::obj) {
            push([&] {
                json j = json::parse(s.begin(), s.end(), nullptr, false);
                if (j.is_discarded())
                    throw InputError("malformed JSON");
                return instance_from_json(j);
            });
        } else {
            push([&] { return instance_from_line(s); });
        }
    }
    return out;
}

struct VerdictDocument {
    std::optional<std::string> name;
    Mode mode = Mode::forcible;
    Decision decision = Decision::yes;
    std::optional<std::size_t> failing_t;
    std::optional<std::vector<degree_t>> witness;
    std::optional<std::vector<TermSlack>> slack;
    std::optional<std::int64_t> elapsed_us;

    friend bool operator==(const VerdictDocument&, const VerdictDocument&) = default;
};

inline json to_json(const VerdictDocument& v) {
    json j;
    j["name"] = v.name ? json(*v.name) : json(nullptr);
    j["mode"] = std::string(to_string(v.mode));
    j["decision"] = std::string(to_string(v.decision));
    j["failing_t"] = v.failing_t ? json(*v.failing_t) : json(nullptr);
    if (v.witness)
        j["witness"] = *v.witness;
    if (v.slack) {
        json table = json::array();
        for (const auto& s : *v.slack)
            table.push_back({{"t", s.t}, {"slack", s.slack}});
        j["slack"] = std::move(table);
    }
    if (v.elapsed_us)
        j["elapsed_us"] = *v.elapsed_us;
    return j;
}

inline VerdictDocument verdict_from_json(const json& j) {
    VerdictDocument v;
    try {
        if (!j.at("name").is_null())
            v.name = j.at("name").get<std::string>();
        auto mode = mode_from_string(j.at("mode").get<std::string>());
        auto decision = decision_from_string(j.at("decision").get<std::string>());
        if (!mode || !decision)
            throw InputError("unknown mode or decision");
        v.mode = *mode;
        v.decision = *decision;
        if (!j.at("failing_t").is_null())
            v.failing_t = j.at("failing_t").get<std::size_t>();
        if (j.contains("witness"))
            v.witness = j["witness"].get<std::vector<degree_t>>();
        if (j.contains("slack")) {
            std::vector<TermSlack> table;
            for (const auto& row : j["slack"])
                table.push_back({row.at("t").get<std::size_t>(), row.at("slack").get<sum_t>()});
            v.slack = std::move(table);
        }
        if (j.contains("elapsed_us"))
            v.elapsed_us = j["elapsed_us"].get<std::int64_t>();
    } catch (const json::exception& e) {
        throw InputError(std::string("bad verdict document: ") + e.what());
    }
    return v;
}

struct EvalOptions {
    bool explain = false;
    bool witness = false;
    std::uint64_t volume_cap = default_volume_cap;
};

/// Runs one decider. Graphic mode tests the lower sequence and requires a
/// degenerate box; its failing_t is 0 for an odd sum.
inline Verdict evaluate(Mode mode, const IntervalInstance& inst, const EvalOptions& opts = {}) {
    switch (mode) {
    case Mode::forcible: {
        ForcibleOptions fo;
        fo.explain = opts.explain;
        fo.witness = opts.witness;
        fo.volume_cap = opts.volume_cap;
        return check_forcible(inst, fo);
    }
    case Mode::potential: return check_potential(inst, {opts.explain});
    case Mode::orderB: return check_forcible_orderB(inst, opts.explain);
    case Mode::gy_necessary: return check_gy_necessary(inst, opts.explain);
    case Mode::gy_sufficient: return check_gy_sufficient(inst, opts.explain);
    case Mode::graphic: {
        if (!inst.is_fixed())
            throw InputError("graphic mode takes a single sequence (b must equal a)");
        Verdict v;
        const auto d = inst.lower();
        const auto slacks = eg_slacks(d);
        if (!detail::even(d)) {
            v.decision = Decision::no;
            v.failing_t = 0;
        } else {
            for (std::size_t t = 0; t < slacks.size(); ++t)
                if (slacks[t] < 0) {
                    v.decision = Decision::no;
                    v.failing_t = t + 1;
                    break;
                }
        }
        if (opts.explain)
            for (std::size_t t = 0; t < slacks.size(); ++t)
                v.slack.push_back({t + 1, slacks[t]});
        return v;
    }
    }
    throw std::logic_error("unknown mode");
}

inline VerdictDocument make_verdict_document(const InstanceDocument& doc, Mode mode, const Verdict& v,
                                             bool explain) {
    VerdictDocument out;
    out.name = doc.name;
    out.mode = mode;
    out.decision = v.decision;
    out.failing_t = v.failing_t;
    out.witness = v.witness;
    if (explain)
        out.slack = v.slack;
    return out;
}

} // namespace degseq
