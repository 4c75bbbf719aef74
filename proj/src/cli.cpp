#include "hwm/cli.hpp"

#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "hwm/classify.hpp"
#include "hwm/theta.hpp"

namespace hwm {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Family parse_family(const std::string& name) {
    if (name == "so-even") return Family::SoEven;
    if (name == "so-odd") return Family::SoOdd;
    if (name == "e6") return Family::E6;
    if (name == "e7") return Family::E7;
    throw UsageError("unknown family '" + name + "' (so-even, so-odd, e6, e7)");
}

RootSystemSpec build_for(const std::string& family, int n) {
    Family f = parse_family(family);
    if ((f == Family::SoEven || f == Family::SoOdd) && n <= 0)
        throw UsageError("--n is required for the so families");
    try {
        return build(f, n);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
}

// Parses weight text for the family, applying the E-coordinate completions:
// e6 accepts (x1..x6) -> (x1..x6, x6, -x6), e7 accepts (x1..x7) -> (.., -x7);
// full 8-tuples are validated against the same constraints.
Weight parse_family_weight(const RootSystemSpec& rs, const std::string& text) {
    Weight w;
    try {
        w = parse_weight(text);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    const std::size_t m = w.size();
    switch (rs.family) {
        case Family::SoEven:
        case Family::SoOdd:
            if (static_cast<int>(m) != rs.n)
                throw UsageError("expected " + std::to_string(rs.n) + " coordinates, got " +
                                 std::to_string(m));
            return w;
        case Family::E6:
            if (m == 6) {
                w.push_back(w[5]);
                w.push_back(-w[5]);
                return w;
            }
            if (m == 8) {
                if (!(w[5] == w[6] && w[7] == -w[5]))
                    throw UsageError("e6 weights need x6 = x7 = -x8");
                return w;
            }
            throw UsageError("e6 weights take 6 or 8 coordinates, got " + std::to_string(m));
        case Family::E7:
            if (m == 7) {
                w.push_back(-w[6]);
                return w;
            }
            if (m == 8) {
                if (w[7] != -w[6])
                    throw UsageError("e7 weights need x8 = -x7");
                return w;
            }
            throw UsageError("e7 weights take 7 or 8 coordinates, got " + std::to_string(m));
    }
    throw UsageError("unknown family");
}

json weight_json(const Weight& w) {
    json arr = json::array();
    for (const Rat& c : w) arr.push_back(c.str());
    return arr;
}

int verdict_exit(Status s) {
    switch (s) {
        case Status::Unitary: return 0;
        case Status::Nonunitary: return 1;
        case Status::NotParameter: return 2;
    }
    return 2;
}

json theta_json(const ThetaType& t) {
    return json{{"a", t.a}, {"b", t.b}, {"c", t.c}, {"n", t.n}, {"hprime", t.hprime_weight}};
}

}  // namespace

int cmd_classify(const std::string& family, int n, const std::string& weight,
                 const std::string& form, const std::string& format,
                 std::ostream& out, std::ostream& err) {
    try {
        if (form != "lambda" && form != "infchar")
            throw UsageError("--form must be 'lambda' or 'infchar'");
        if (format != "text" && format != "json")
            throw UsageError("--format must be 'text' or 'json'");
        RootSystemSpec rs = build_for(family, n);
        Weight w = parse_family_weight(rs, weight);
        UnitarityVerdict v =
            form == "lambda" ? classify_lambda(rs, w) : classify_inf_char(rs, w);
        if (format == "json") {
            json j{{"family", family},
                   {"form", form},
                   {"weight", weight_json(w)},
                   {"status", status_name(v.status)},
                   {"case", case_label_name(v.case_label)},
                   {"verma_irreducible", v.verma_irreducible}};
            out << j.dump() << "\n";
        } else {
            out << status_name(v.status) << " [" << case_label_name(v.case_label)
                << "] verma_irreducible=" << (v.verma_irreducible ? "true" : "false")
                << " " << tuple_text(w) << "\n";
        }
        return verdict_exit(v.status);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_infchar(const std::string& family, int n, const std::string& dominant,
                const std::string& format, std::ostream& out, std::ostream& err) {
    try {
        if (format != "text" && format != "json")
            throw UsageError("--format must be 'text' or 'json'");
        RootSystemSpec rs = build_for(family, n);
        Weight w = parse_family_weight(rs, dominant);
        InfCharReport rep;
        try {
            rep = inf_char_report(rs, w);
        } catch (const std::domain_error& e) {
            err << e.what() << "\n";
            return 2;
        }
        if (format == "json") {
            json juni = json::array(), jnon = json::array();
            for (const Weight& c : rep.unitary) juni.push_back(weight_json(c));
            for (const Weight& c : rep.nonunitary) jnon.push_back(weight_json(c));
            json j{{"family", family},
                   {"dominant", weight_json(w)},
                   {"unitary", juni},
                   {"nonunitary", jnon}};
            out << j.dump() << "\n";
        } else {
            out << "dominant: " << tuple_text(w) << "\n";
            out << "unitary (" << rep.unitary.size() << "):\n";
            for (const Weight& c : rep.unitary) out << tuple_text(c) << "\n";
            out << "nonunitary (" << rep.nonunitary.size() << "):\n";
            for (const Weight& c : rep.nonunitary) out << tuple_text(c) << "\n";
        }
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_theta(int m, int max_level, const std::string& format,
              std::ostream& out, std::ostream& err) {
    try {
        if (max_level < 0)
            throw UsageError("--max-level must be non-negative");
        if (format != "text" && format != "json")
            throw UsageError("--format must be 'text' or 'json'");
        std::vector<ThetaType> types = pi_types(m, max_level);
        ThetaType mt = minimal_type(m);
        if (format == "json") {
            json jt = json::array();
            for (const ThetaType& t : types) jt.push_back(theta_json(t));
            json j{{"m", m},
                   {"max_level", max_level},
                   {"minimal", theta_json(mt)},
                   {"types", jt}};
            out << j.dump() << "\n";
        } else {
            out << "minimal type: a=" << mt.a << " b=" << mt.b << " c=" << mt.c
                << " n=" << mt.n << " h'=" << mt.hprime_weight << "\n";
            out << "a\tb\tc\tn\th'\n";
            for (const ThetaType& t : types)
                out << t.a << "\t" << t.b << "\t" << t.c << "\t" << t.n << "\t"
                    << t.hprime_weight << "\n";
        }
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace hwm
