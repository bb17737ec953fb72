#include "rgcm/report.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "rgcm/io.hpp"
#include "rgcm/lu.hpp"

namespace rgcm {

using nlohmann::json;

namespace {

json vec_json(const std::vector<double>& v) {
    return json(v);
}

// Index containers are 0-based internally, 1-based in reports.
json idx_json(const std::vector<int>& v) {
    json out = json::array();
    for (int i : v)
        out.push_back(i + 1);
    return out;
}

json matrix_json(const SquareMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j)
            row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const ValidationReport& r) {
    json out{{"is_rgcm", r.is_rgcm}, {"violations", json::array()}};
    for (const auto& v : r.violations) {
        json item{{"kind", to_string(v.kind)}};
        json positions = json::array();
        for (auto [i, j] : v.positions)
            positions.push_back({i + 1, j + 1});
        item["positions"] = std::move(positions);
        json components = json::array();
        for (const auto& c : v.components)
            components.push_back(idx_json(c));
        item["components"] = std::move(components);
        out["violations"].push_back(std::move(item));
    }
    return out;
}

json to_json(const Classification& c) {
    return {{"verdict", to_string(c.verdict)},
            {"margin", c.margin},
            {"s", c.s},
            {"rho", c.rho},
            {"tolerance_used", c.tolerance_used},
            {"certificate", vec_json(c.certificate)}};
}

json to_json(const ShiftResult& s) {
    return {{"d", s.d},
            {"affine_certificate", vec_json(s.affine_certificate)},
            {"residual", s.residual}};
}

json to_json(const MinorReport& m) {
    json out{{"leading", vec_json(m.leading)},
             {"det", m.det},
             {"all_positive", m.all_positive},
             {"all_proper_positive", m.all_proper_positive},
             {"exhaustive", nullptr}};
    if (m.exhaustive) {
        json list = json::array();
        for (const auto& [subset, minor] : *m.exhaustive)
            list.push_back({{"indices", idx_json(subset)}, {"minor", minor}});
        out["exhaustive"] = std::move(list);
    }
    return out;
}

json to_json(const InverseSignSummary& s) {
    return {{"status", to_string(s.status)},
            {"min_entry", s.min_entry},
            {"max_entry", s.max_entry}};
}

json to_json(const HyperbolicReport& h) {
    json evidence = json::array();
    for (const auto& ev : h.evidence) {
        json blocks = json::array();
        for (const auto& b : ev.blocks)
            blocks.push_back({{"members", idx_json(b.members)},
                              {"verdict", to_string(b.verdict)},
                              {"margin", b.margin}});
        evidence.push_back({{"indices", idx_json(ev.indices)}, {"blocks", std::move(blocks)}});
    }
    json out{{"verdict", to_string(h.verdict)},
             {"evidence", std::move(evidence)},
             {"witness", nullptr}};
    if (h.witness)
        out["witness"] = {{"w", vec_json(h.witness->w)},
                          {"violation_index", h.witness->violation_index + 1}};
    return out;
}

json to_json(const Symmetrization& s) {
    json out{{"status", s.symmetrizable ? "symmetrizable" : "non_symmetrizable"},
             {"d", nullptr},
             {"b", nullptr},
             {"cycle", nullptr},
             {"forward_product", nullptr},
             {"backward_product", nullptr}};
    if (s.symmetrizable) {
        out["d"] = vec_json(s.d);
        out["b"] = matrix_json(*s.b);
    } else {
        out["cycle"] = idx_json(s.cycle);
        out["forward_product"] = s.forward_product;
        out["backward_product"] = s.backward_product;
    }
    return out;
}

json to_json(const FullReport& r) {
    json consistency = json::array();
    for (const auto& c : r.consistency)
        consistency.push_back({{"name", c.name},
                               {"applicable", c.applicable},
                               {"passed", c.passed},
                               {"detail", c.detail}});
    return {{"n", r.n},
            {"det", r.det},
            {"validation", to_json(r.validation)},
            {"classification", to_json(r.classification)},
            {"shift", to_json(r.shift)},
            {"minors", to_json(r.minors)},
            {"inverse", to_json(r.inverse)},
            {"hyperbolic", to_json(r.hyperbolic)},
            {"symmetrization", to_json(r.symmetrization)},
            {"consistency", std::move(consistency)},
            {"all_consistent", r.all_consistent}};
}

std::string vec_text(const std::vector<double>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += format_double(v[i]);
    }
    return out + "]";
}

std::string idx_text(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(v[i] + 1);
    }
    return out + ")";
}

std::string signed_double(double x) {
    return (x >= 0 ? "+" : "") + format_double(x);
}

} // namespace

FullReport build_full_report(const SquareMatrix& a, const ReportOptions& opt) {
    require_rgcm(a);

    FullReport r{.n = a.size(),
                 .det = 0.0,
                 .validation = validate(a),
                 .classification = classify(a, opt.tol),
                 .shift = critical_shift(a, opt.tol),
                 .minors = minor_report(a, opt.exhaustive_cap),
                 .inverse = inverse_sign(a),
                 .hyperbolic = hyperbolic_report(a, opt.mode, opt.tol),
                 .symmetrization = symmetrize(a, opt.tol),
                 .consistency = {},
                 .all_consistent = true};
    r.det = r.minors.det;

    const Classification& cls = r.classification;
    const double band = cls.tolerance_used;
    // Agreement checks are only decidable away from the affine boundary;
    // inside this shell the criteria legitimately diverge in floating point.
    const bool decisive = std::abs(cls.margin) > 10.0 * band;
    const bool affine = cls.verdict == Verdict::Affine;
    const bool hyp = r.hyperbolic.verdict == HyperbolicVerdict::Hyperbolic ||
                     r.hyperbolic.verdict == HyperbolicVerdict::StrictlyHyperbolic;

    auto add = [&](std::string name, bool applicable, bool passed, std::string detail) {
        if (applicable && !passed)
            r.all_consistent = false;
        r.consistency.push_back(
            {std::move(name), applicable, !applicable || passed, std::move(detail)});
    };

    {
        const bool applicable =
            static_cast<int>(r.n) <= opt.exhaustive_cap && (affine || decisive);
        Verdict by_minors = cls.verdict;
        if (applicable)
            by_minors = classify_by_minors(a, opt.exhaustive_cap);
        add("minors_vs_spectral", applicable, by_minors == cls.verdict,
            "principal-minor classification = " + to_string(by_minors) +
                ", spectral = " + to_string(cls.verdict));
    }
    add("finite_iff_inverse_positive", decisive,
        (cls.verdict == Verdict::Finite) ==
            (r.inverse.status == InverseSignStatus::StrictlyPositive),
        "verdict = " + to_string(cls.verdict) + ", inverse " + to_string(r.inverse.status));
    add("hyperbolic_iff_inverse_nonpositive",
        cls.verdict == Verdict::Indefinite && decisive,
        hyp == (r.inverse.status == InverseSignStatus::Nonpositive),
        "hyperbolic report = " + to_string(r.hyperbolic.verdict) + ", inverse " +
            to_string(r.inverse.status));
    add("finite_implies_det_positive", cls.verdict == Verdict::Finite && decisive,
        r.det > 0.0, "det = " + format_double(r.det));
    add("hyperbolic_implies_det_negative", hyp && decisive, r.det < 0.0,
        "det = " + format_double(r.det));
    {
        const double eps = 1e-3;
        const Classification above = classify(a.shifted(r.shift.d + eps), opt.tol);
        const Classification below = classify(a.shifted(r.shift.d - eps), opt.tol);
        add("shift_law", true,
            above.verdict == Verdict::Finite && below.verdict == Verdict::Indefinite,
            "classify(A+(d+1e-3)I) = " + to_string(above.verdict) +
                ", classify(A+(d-1e-3)I) = " + to_string(below.verdict));
    }
    return r;
}

std::string to_json_string(const FullReport& r, int indent) { return to_json(r).dump(indent); }
std::string to_json_string(const ValidationReport& r, int indent) { return to_json(r).dump(indent); }
std::string to_json_string(const Classification& c, int indent) { return to_json(c).dump(indent); }
std::string to_json_string(const ShiftResult& s, int indent) { return to_json(s).dump(indent); }
std::string to_json_string(const MinorReport& m, int indent) { return to_json(m).dump(indent); }
std::string to_json_string(const InverseSignSummary& s, int indent) { return to_json(s).dump(indent); }
std::string to_json_string(const HyperbolicReport& h, int indent) { return to_json(h).dump(indent); }
std::string to_json_string(const Symmetrization& s, int indent) { return to_json(s).dump(indent); }

std::string to_text(const ValidationReport& r) {
    if (r.is_rgcm)
        return "valid real generalized Cartan matrix\n";
    std::ostringstream os;
    os << "INVALID:";
    for (const auto& v : r.violations) {
        os << ' ' << to_string(v.kind);
        if (!v.positions.empty()) {
            os << " at";
            for (auto [i, j] : v.positions)
                os << " (" << i + 1 << ',' << j + 1 << ')';
        }
        if (!v.components.empty()) {
            os << " components";
            for (const auto& c : v.components)
                os << ' ' << idx_text(c);
        }
        os << ';';
    }
    os << '\n';
    return os.str();
}

std::string to_text(const Classification& c) {
    std::ostringstream os;
    std::string verdict = to_string(c.verdict);
    verdict[0] = static_cast<char>(std::toupper(verdict[0]));
    os << verdict << " (margin=" << signed_double(c.margin)
       << ", s=" << format_double(c.s) << ", rho=" << format_double(c.rho)
       << ", certificate=" << vec_text(c.certificate) << ")\n";
    return os.str();
}

std::string to_text(const ShiftResult& s) {
    std::ostringstream os;
    os << "d=" << format_double(s.d) << "  (A + d*I is affine; residual "
       << format_double(s.residual) << ")\ncertificate: " << vec_text(s.affine_certificate)
       << '\n';
    return os.str();
}

std::string to_text(const MinorReport& m) {
    std::ostringstream os;
    os << "leading minors: " << vec_text(m.leading) << "\ndet: " << format_double(m.det)
       << "\nall principal minors positive: " << (m.all_positive ? "yes" : "no")
       << "\nall proper principal minors positive: " << (m.all_proper_positive ? "yes" : "no")
       << '\n';
    if (m.exhaustive) {
        os << "principal minors (" << m.exhaustive->size() << "):\n";
        for (const auto& [subset, minor] : *m.exhaustive)
            os << "  " << idx_text(subset) << " = " << format_double(minor) << '\n';
    }
    return os.str();
}

std::string to_text(const InverseSignSummary& s) {
    std::ostringstream os;
    os << "inverse: " << to_string(s.status);
    if (s.status != InverseSignStatus::Singular)
        os << " (min entry " << format_double(s.min_entry) << ", max entry "
           << format_double(s.max_entry) << ")";
    os << '\n';
    return os.str();
}

std::string to_text(const HyperbolicReport& h) {
    std::ostringstream os;
    os << to_string(h.verdict) << '\n';
    for (const auto& ev : h.evidence) {
        os << "  submatrix " << idx_text(ev.indices) << ":";
        for (const auto& b : ev.blocks)
            os << " block " << idx_text(b.members) << " " << to_string(b.verdict)
               << " (margin " << signed_double(b.margin) << ")";
        os << '\n';
    }
    if (h.witness)
        os << "  witness w = " << vec_text(h.witness->w) << " with w["
           << h.witness->violation_index + 1 << "] < 0 and A w <= 0\n";
    return os.str();
}

std::string to_text(const Symmetrization& s) {
    std::ostringstream os;
    if (s.symmetrizable) {
        os << "symmetrizable: d = " << vec_text(s.d) << "\nB:\n";
        const SquareMatrix& b = *s.b;
        for (std::size_t i = 0; i < b.size(); ++i) {
            os << "  ";
            for (std::size_t j = 0; j < b.size(); ++j)
                os << (j ? " " : "") << format_double(b(i, j));
            os << '\n';
        }
    } else {
        os << "non-symmetrizable: cycle " << idx_text(s.cycle) << " has forward product "
           << format_double(s.forward_product) << " but backward product "
           << format_double(s.backward_product) << '\n';
    }
    return os.str();
}

std::string to_text(const FullReport& r) {
    std::ostringstream os;
    os << "n: " << r.n << "\ndet: " << format_double(r.det) << '\n'
       << "validation: " << to_text(r.validation)
       << "classification: " << to_text(r.classification)
       << "critical shift: " << to_text(r.shift)
       << "minors:\n" << to_text(r.minors)
       << to_text(r.inverse)
       << "hyperbolic: " << to_text(r.hyperbolic)
       << "symmetrization: " << to_text(r.symmetrization)
       << "consistency:\n";
    for (const auto& c : r.consistency) {
        os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
        if (!c.applicable)
            os << " (not applicable)";
        else
            os << ": " << c.detail;
        os << '\n';
    }
    os << (r.all_consistent ? "all consistency checks passed\n"
                            : "CONSISTENCY FAILURE\n");
    return os.str();
}

} // namespace rgcm
