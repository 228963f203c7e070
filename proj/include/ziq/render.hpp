#pragma once

#include "search.hpp"

#include <json.hpp>

namespace ziq {

// A fully-specified search request, ready to run and render.
template <exact_integer I>
struct search_job {
    std::string id;   // catalog id or "custom"
    std::string form; // human-readable equation
    bool is_z4 = false;
    quartic_equation<I> eq{};
    gint_t<I> eps{}; // used when is_z4
    int bound = 8;
    int workers = 1;
    bool require_primitive = true;
};

template <exact_integer I>
struct search_result {
    std::vector<solution_record<I>> records;
    std::vector<orbit<I>> orbits;
};

inline std::string quartic_form_text(quartic_id id) {
    switch (id) {
        case quartic_id::fermat: return "X^4 + Y^4 = Z^2";
        case quartic_id::szabo: return "X^4 + Y^4 = iZ^2";
        case quartic_id::fermat_1pi: return "X^4 + Y^4 = (1+i)Z^2";
        case quartic_id::mordell: return "X^4 + 6X^2Y^2 + Y^4 = Z^2";
        case quartic_id::mordell_neg: return "X^4 - 6X^2Y^2 + Y^4 = Z^2";
        case quartic_id::mordell_2i: return "X^4 + 6(1+i)X^2Y^2 + 2iY^4 = Z^2";
        case quartic_id::mordell_2i_neg: return "X^4 - 6(1+i)X^2Y^2 + 2iY^4 = Z^2";
    }
    return "?";
}

// Accepts a catalog id (including z4_i / z4_1pi) or four comma-separated
// Gaussian literals a,b,c,d.
template <exact_integer I>
search_job<I> parse_equation_spec(std::string_view s) {
    search_job<I> job;
    if (s == "z4_i" || s == "z4_1pi") {
        job.id = std::string(s);
        job.is_z4 = true;
        job.eps = s == "z4_i" ? gint_t<I>{I(0), I(1)} : gint_t<I>{I(1), I(1)};
        job.form = s == "z4_i" ? "X^4 + iY^2 = Z^4" : "X^4 + (1+i)Y^2 = Z^4";
        return job;
    }
    if (auto id = parse_quartic_id(s)) {
        job.id = std::string(s);
        job.eq = make_equation<I>(*id);
        job.form = quartic_form_text(*id);
        return job;
    }
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string_view::npos) comma = s.size();
        parts.push_back(s.substr(pos, comma - pos));
        pos = comma + 1;
    }
    if (parts.size() != 4)
        throw std::invalid_argument(
            "equation: expected a catalog id or four comma-separated literals a,b,c,d");
    job.id = "custom";
    job.eq = {parse_gint<I>(parts[0]), parse_gint<I>(parts[1]), parse_gint<I>(parts[2]),
              parse_gint<I>(parts[3])};
    job.form = "(" + to_string(job.eq.a) + ")X^4 + (" + to_string(job.eq.b) + ")X^2Y^2 + (" +
               to_string(job.eq.c) + ")Y^4 = (" + to_string(job.eq.d) + ")Z^2";
    return job;
}

template <exact_integer I>
search_result<I> run_search(const search_job<I>& job) {
    search_result<I> res;
    if (job.is_z4) {
        res.records = search_biquadratic_z4(job.eps, job.bound, job.workers, job.require_primitive);
        res.orbits = orbit_normalize_z4(res.records, job.eps);
    } else {
        res.records = search_quartic(job.eq, job.bound, job.workers, job.require_primitive);
        res.orbits = orbit_normalize_quartic(res.records, job.eq);
    }
    return res;
}

template <exact_integer I>
std::string render_json(const search_job<I>& job, const search_result<I>& res) {
    nlohmann::ordered_json eq;
    eq["id"] = job.id;
    eq["form"] = job.form;
    if (job.is_z4) {
        eq["eps"] = to_string(job.eps);
    } else {
        eq["a"] = to_string(job.eq.a);
        eq["b"] = to_string(job.eq.b);
        eq["c"] = to_string(job.eq.c);
        eq["d"] = to_string(job.eq.d);
    }
    nlohmann::ordered_json orbits = nlohmann::ordered_json::array();
    for (const auto& o : res.orbits) {
        nlohmann::ordered_json rep;
        rep["x"] = to_string(o.representative.x);
        rep["y"] = to_string(o.representative.y);
        rep["z"] = to_string(o.representative.z);
        orbits.push_back({{"representative", rep}, {"size", o.size}});
    }
    nlohmann::ordered_json out;
    out["equation"] = eq;
    out["bound"] = job.bound;
    out["orbits"] = orbits;
    out["raw_count"] = res.records.size();
    return out.dump(2) + "\n";
}

template <exact_integer I>
std::string render_csv(const search_job<I>&, const search_result<I>& res) {
    std::string out = "x,y,z,primitive,orbit_id\n";
    for (const auto& r : res.records)
        out += to_string(r.x) + ',' + to_string(r.y) + ',' + to_string(r.z) + ',' +
               (r.primitive ? "1" : "0") + ',' + "\"" + r.orbit_id + "\"\n";
    return out;
}

template <exact_integer I>
std::string render_text(const search_job<I>& job, const search_result<I>& res) {
    std::string out;
    out += "equation: " + job.form + " [" + job.id + "]\n";
    out += "bound: " + std::to_string(job.bound) + "\n";
    out += "raw solutions: " + std::to_string(res.records.size()) + "\n";
    out += "orbits: " + std::to_string(res.orbits.size()) + "\n";
    for (const auto& o : res.orbits)
        out += "  orbit " + o.representative.orbit_id + " size " + std::to_string(o.size) + "\n";
    for (const auto& r : res.records)
        out += "  x=" + to_string(r.x) + " y=" + to_string(r.y) + " z=" + to_string(r.z) +
               (r.primitive ? "" : " (imprimitive)") + " orbit=" + r.orbit_id + "\n";
    return out;
}

inline std::string render_report_text(const theorem_report& rep) {
    std::string out;
    out += "claim " + rep.tag + ": " + rep.statement + "\n";
    out += "equation: " + rep.equation_text + "\n";
    out += "bound: " + std::to_string(rep.bound) + "\n";
    out += "raw solutions: " + std::to_string(rep.raw_count) +
           ", orbits: " + std::to_string(rep.orbit_count) + "\n";
    for (const auto& n : rep.notes) out += "note: " + n + "\n";
    for (const auto& w : rep.witnesses) out += "witness: " + w + "\n";
    out += std::string("result: ") + (rep.pass ? "PASS" : "FAIL") + "\n";
    return out;
}

} // namespace ziq
