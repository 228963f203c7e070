#include <catch2/catch_amalgamated.hpp>

#include <ziq/render.hpp>
#include <ziq/selftest.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>

using namespace ziq;
using G = gint;
using Rec = solution_record<big_int>;

namespace {

// Independent reference enumeration: a triple-nested box scan checking the
// equation coordinate-wise, with the primitivity rule applied directly. The
// search derives z from (x, y) without bounding it, so the z scan here uses a
// wider box that provably covers every reachable value: |z|^2 = |w/d| and
// |w| <= (|a|+|b|+|c|) * (2*bound^2)^2, so zbound >= sqrt of that suffices
// (the tests assert the search never emits a z outside it).
std::vector<Rec> reference_quartic(const quartic_equation<big_int>& eq, int bound, int zbound,
                                   bool require_primitive) {
    std::map<std::pair<big_int, big_int>, std::vector<G>> by_rhs; // d*z^2 -> z candidates
    for (int zr = -zbound; zr <= zbound; ++zr)
        for (int zi = -zbound; zi <= zbound; ++zi) {
            if (!zr && !zi) continue;
            const G z{zr, zi};
            const G w = eq.d * sq(z);
            by_rhs[{w.re, w.im}].push_back(z);
        }
    std::vector<Rec> out;
    for (int xr = -bound; xr <= bound; ++xr)
        for (int xi = -bound; xi <= bound; ++xi) {
            if (!xr && !xi) continue;
            const G x{xr, xi};
            const G x2 = sq(x), x4 = sq(x2);
            for (int yr = -bound; yr <= bound; ++yr)
                for (int yi = -bound; yi <= bound; ++yi) {
                    if (!yr && !yi) continue;
                    const G y{yr, yi};
                    const G y2 = sq(y);
                    const G lhs = eq.a * x4 + eq.b * (x2 * y2) + eq.c * sq(y2);
                    const auto it = by_rhs.find({lhs.re, lhs.im});
                    if (it == by_rhs.end()) continue;
                    for (const G& z : it->second) {
                        const bool prim = is_unit(gcd(gcd(x, y), z));
                        if (require_primitive && !prim) continue;
                        out.push_back({x, y, z, prim, {}});
                    }
                }
        }
    std::sort(out.begin(), out.end(), [](const Rec& a, const Rec& b) {
        return std::make_tuple(norm(a.x), a.x.re, a.x.im, norm(a.y), a.y.re, a.y.im, a.z.re,
                               a.z.im) < std::make_tuple(norm(b.x), b.x.re, b.x.im, norm(b.y),
                                                         b.y.re, b.y.im, b.z.re, b.z.im);
    });
    return out;
}

// Same idea for x^4 + eps y^2 = z^4, where the search derives y from (x, z).
std::vector<Rec> reference_z4(const G& eps, int bound, int ybound, bool require_primitive) {
    std::map<std::pair<big_int, big_int>, std::vector<G>> by_rhs; // eps*y^2 -> y candidates
    for (int yr = -ybound; yr <= ybound; ++yr)
        for (int yi = -ybound; yi <= ybound; ++yi) {
            if (!yr && !yi) continue;
            const G y{yr, yi};
            const G w = eps * sq(y);
            by_rhs[{w.re, w.im}].push_back(y);
        }
    std::vector<Rec> out;
    for (int xr = -bound; xr <= bound; ++xr)
        for (int xi = -bound; xi <= bound; ++xi) {
            if (!xr && !xi) continue;
            const G x{xr, xi};
            const G x4 = sq(sq(x));
            for (int zr = -bound; zr <= bound; ++zr)
                for (int zi = -bound; zi <= bound; ++zi) {
                    if (!zr && !zi) continue;
                    const G z{zr, zi};
                    const G w = sq(sq(z)) - x4;
                    const auto it = by_rhs.find({w.re, w.im});
                    if (it == by_rhs.end()) continue;
                    for (const G& y : it->second) {
                        const bool prim = is_unit(gcd(gcd(x, z), y));
                        if (require_primitive && !prim) continue;
                        out.push_back({x, y, z, prim, {}});
                    }
                }
        }
    return out; // order not needed: comparisons below sort or use counts
}

bool in_box(const G& z, int b) {
    return z.re >= -b && z.re <= b && z.im >= -b && z.im <= b;
}

void require_same_records(const std::vector<Rec>& got, const std::vector<Rec>& want) {
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
        REQUIRE(got[k] == want[k]);
        REQUIRE(got[k].primitive == want[k].primitive);
    }
}

} // namespace

TEST_CASE("search input validation", "[search]") {
    const auto eq = make_equation<big_int>(quartic_id::szabo);
    REQUIRE_THROWS_AS(search_quartic(eq, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(search_quartic(eq, -3), std::invalid_argument);
    REQUIRE_THROWS_AS(search_quartic(eq, default_search_budget + 1), std::invalid_argument);
    REQUIRE_THROWS_AS(search_quartic(eq, 9, 1, true, 8), std::invalid_argument);
    REQUIRE_THROWS_AS(search_quartic(eq, 2, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(search_quartic(quartic_equation<big_int>{G{}, G{1}, G{1}, G{1}}, 2),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(search_quartic(quartic_equation<big_int>{G{1}, G{1}, G{1}, G{}}, 2),
                      std::invalid_argument);

    REQUIRE_THROWS_AS(search_biquadratic_z4(G{0, 1}, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(search_biquadratic_z4(G{0, 1}, default_search_budget + 1),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(search_biquadratic_z4(G{0, 1}, 2, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(search_biquadratic_z4(G{}, 2), std::invalid_argument);
}

TEST_CASE("search agrees with a reference box enumeration", "[search]") {
    SECTION("x^4 + y^4 = i z^2, primitive") {
        const auto eq = make_equation<big_int>(quartic_id::szabo);
        const auto got = search_quartic(eq, 3);
        for (const auto& r : got) REQUIRE(in_box(r.z, 30)); // reference z scan covers these
        require_same_records(got, reference_quartic(eq, 3, 30, true));
        REQUIRE(got.size() == 32);
        for (const auto& r : got) REQUIRE(r.primitive);
    }
    SECTION("x^4 + y^4 = i z^2, unrestricted") {
        const auto eq = make_equation<big_int>(quartic_id::szabo);
        const auto got = search_quartic(eq, 3, 1, false);
        for (const auto& r : got) REQUIRE(in_box(r.z, 30));
        require_same_records(got, reference_quartic(eq, 3, 30, false));
        // every x in the box heads the family (x, i^t x, z) with z^2 = -2i x^4,
        // so the unrestricted count is much larger than the primitive one
        REQUIRE(got.size() == 384);
        const auto imprimitive = std::count_if(got.begin(), got.end(),
                                               [](const Rec& r) { return !r.primitive; });
        REQUIRE(imprimitive == 352);
        // a known scaled solution: (1+i, 1+i, 2+2i) with gcd 1+i
        const Rec scaled{G{1, 1}, G{1, 1}, G{2, 2}, false, {}};
        const auto it = std::find(got.begin(), got.end(), scaled);
        REQUIRE(it != got.end());
        REQUIRE_FALSE(it->primitive);
    }
    SECTION("x^4 + 6x^2y^2 + y^4 = z^2") {
        const auto eq = make_equation<big_int>(quartic_id::mordell);
        const auto got = search_quartic(eq, 3);
        for (const auto& r : got) REQUIRE(in_box(r.z, 60));
        require_same_records(got, reference_quartic(eq, 3, 60, true));
        REQUIRE(got.size() == 16);
        // unrestricted adds the scaled family (x, +-i x, +-2i x^2) for non-unit x
        const auto all = search_quartic(eq, 3, 1, false);
        for (const auto& r : all) REQUIRE(in_box(r.z, 60));
        require_same_records(all, reference_quartic(eq, 3, 60, false));
        REQUIRE(all.size() == 192);
        const auto primitive = std::count_if(all.begin(), all.end(),
                                             [](const Rec& r) { return r.primitive; });
        REQUIRE(primitive == 16);
    }
    SECTION("x^4 + y^4 = z^2 is empty even unrestricted") {
        const auto eq = make_equation<big_int>(quartic_id::fermat);
        REQUIRE(search_quartic(eq, 3).empty());
        REQUIRE(search_quartic(eq, 3, 1, false).empty());
        REQUIRE(reference_quartic(eq, 3, 30, false).empty());
    }
    SECTION("x^4 + eps y^2 = z^4 is empty for both catalog eps") {
        for (const G eps : {G{0, 1}, G{1, 1}}) {
            REQUIRE(search_biquadratic_z4(eps, 6).empty());
            REQUIRE(search_biquadratic_z4(eps, 3, 1, false).empty());
            REQUIRE(reference_z4(eps, 3, 30, false).empty());
        }
    }
}

TEST_CASE("search output order is frozen", "[search]") {
    const auto got = search_quartic(make_equation<big_int>(quartic_id::szabo), 2);
    REQUIRE(got.size() == 32);
    REQUIRE(got[0] == Rec{G{-1}, G{-1}, G{-1, 1}, true, {}});
    REQUIRE(got[1] == Rec{G{-1}, G{-1}, G{1, -1}, true, {}});
    REQUIRE(got[2] == Rec{G{-1}, G{0, -1}, G{-1, 1}, true, {}});
    REQUIRE(got[3] == Rec{G{-1}, G{0, -1}, G{1, -1}, true, {}});
}

TEST_CASE("search is deterministic across worker counts", "[search]") {
    const auto eq = make_equation<big_int>(quartic_id::szabo);
    const auto base = search_quartic(eq, 3, 1, false);
    for (int workers : {2, 4, 8}) {
        const auto other = search_quartic(eq, 3, workers, false);
        require_same_records(other, base);
    }
    require_same_records(search_quartic(eq, 3, 1, false), base); // repeat run

    const auto meq = make_equation<big_int>(quartic_id::mordell);
    const auto mbase = search_quartic(meq, 3);
    for (int workers : {4, 8}) require_same_records(search_quartic(meq, 3, workers), mbase);
}

TEST_CASE("orbit grouping", "[search]") {
    SECTION("single unit orbit: x^4 + y^4 = i z^2 at bound 3") {
        const auto eq = make_equation<big_int>(quartic_id::szabo);
        auto recs = search_quartic(eq, 3);
        const auto orbits = orbit_normalize_quartic(recs, eq);
        REQUIRE(orbits.size() == 1);
        REQUIRE(orbits[0].size == 32);
        REQUIRE(orbits[0].representative.orbit_id == "(-1, -1, -1+i)");
        REQUIRE(orbits[0].representative.x == G{-1});
        REQUIRE(orbits[0].representative.y == G{-1});
        REQUIRE(orbits[0].representative.z == G{-1, 1});
        for (const auto& r : recs) REQUIRE(r.orbit_id == "(-1, -1, -1+i)");
    }
    SECTION("one orbit per scale class when imprimitive records are included") {
        const auto eq = make_equation<big_int>(quartic_id::szabo);
        auto recs = search_quartic(eq, 3, 1, false);
        const auto orbits = orbit_normalize_quartic(recs, eq);
        // every x in the box scales the unit solution, one orbit per x-class
        const std::array<std::string, 12> reps{
            "(-1, -1, -1+i)",     "(-1-i, -1-i, -2-2i)",  "(-2, -2, -4+4i)",
            "(-2-i, -2-i, -7-i)", "(-2+i, -2+i, -1-7i)",  "(-2-2i, -2-2i, -8-8i)",
            "(-3, -3, -9+9i)",    "(-3-i, -3-i, -14+2i)", "(-3+i, -3+i, -2+14i)",
            "(-3-2i, -3-2i, -17-7i)", "(-3+2i, -3+2i, -7-17i)", "(-3-3i, -3-3i, -18-18i)"};
        REQUIRE(orbits.size() == reps.size());
        for (std::size_t k = 0; k < reps.size(); ++k) {
            REQUIRE(orbits[k].representative.orbit_id == reps[k]);
            REQUIRE(orbits[k].size == 32);
            if (k == 0)
                REQUIRE(orbits[k].representative.primitive);
            else
                REQUIRE_FALSE(orbits[k].representative.primitive);
        }
        std::size_t total = 0;
        for (const auto& o : orbits) total += o.size;
        REQUIRE(total == recs.size());
        REQUIRE(recs.size() == 384);
        for (const auto& r : recs)
            REQUIRE(std::find(reps.begin(), reps.end(), r.orbit_id) != reps.end());
    }
    SECTION("mordell unit orbit at bound 3") {
        const auto eq = make_equation<big_int>(quartic_id::mordell);
        auto recs = search_quartic(eq, 3);
        const auto orbits = orbit_normalize_quartic(recs, eq);
        REQUIRE(orbits.size() == 1);
        REQUIRE(orbits[0].size == 16);
        REQUIRE(orbits[0].representative.orbit_id == "(-1, -i, -2i)");
    }
    SECTION("empty input gives no orbits") {
        const auto eq = make_equation<big_int>(quartic_id::fermat);
        std::vector<Rec> recs;
        REQUIRE(orbit_normalize_quartic(recs, eq).empty());
        std::vector<Rec> zrecs;
        REQUIRE(orbit_normalize_z4(zrecs, G{0, 1}).empty());
    }
    SECTION("the action is re-checked on every image") {
        const auto eq = make_equation<big_int>(quartic_id::fermat);
        std::vector<Rec> fake{{G{1}, G{1}, G{1}, true, {}}}; // 1 + 1 != 1
        REQUIRE_THROWS_AS(orbit_normalize_quartic(fake, eq), std::logic_error);
        std::vector<Rec> zfake{{G{1}, G{1}, G{1}, true, {}}}; // 1 + i != 1
        REQUIRE_THROWS_AS(orbit_normalize_z4(zfake, G{0, 1}), std::logic_error);
    }
}

TEST_CASE("claim verification reports", "[search]") {
    SECTION("tag list") {
        REQUIRE(theorem_tags() ==
                std::vector<std::string>{"3.1", "3.2", "3.3", "3.4", "3.5", "3.6", "3.9"});
    }
    SECTION("all catalog claims pass their desk check at bound 6") {
        const std::vector<std::size_t> raw{0, 0, 32, 0, 0, 16, 0};
        const std::vector<std::size_t> orbits{0, 0, 1, 0, 0, 1, 0};
        for (std::size_t k = 0; k < theorem_tags().size(); ++k) {
            const auto rep = verify_theorem(theorem_tags()[k], 6);
            INFO("tag " << rep.tag);
            REQUIRE(rep.pass);
            REQUIRE(rep.witnesses.empty());
            REQUIRE(rep.bound == 6);
            REQUIRE(rep.raw_count == raw[k]);
            REQUIRE(rep.orbit_count == orbits[k]);
            REQUIRE_FALSE(rep.statement.empty());
            REQUIRE_FALSE(rep.equation_text.empty());
        }
    }
    SECTION("notes explain the catalog quirks") {
        using Catch::Matchers::ContainsSubstring;
        const auto r33 = verify_theorem("3.3", 4);
        REQUIRE(r33.notes.size() == 1);
        REQUIRE_THAT(r33.notes[0], ContainsSubstring("associate of 1-i"));
        const auto r36 = verify_theorem("3.6", 4);
        REQUIRE(r36.notes.size() == 1);
        REQUIRE_THAT(r36.notes[0], ContainsSubstring("inconsistent"));
        const auto r39 = verify_theorem("3.9", 4);
        REQUIRE(r39.notes.size() == 1);
        REQUIRE_THAT(r39.notes[0], ContainsSubstring("restricted to even Y"));
    }
    SECTION("unknown tags are rejected") {
        REQUIRE_THROWS_AS(verify_theorem("9.9", 4), std::invalid_argument);
        REQUIRE_THROWS_WITH(verify_theorem("9.9", 4),
                            Catch::Matchers::ContainsSubstring("unknown tag"));
    }
    SECTION("a failing report renders its witnesses") {
        theorem_report rep;
        rep.tag = "demo";
        rep.statement = "no solutions";
        rep.pass = false;
        rep.witnesses.push_back("unexpected solution (1, 1, 1-i)");
        const auto text = render_report_text(rep);
        REQUIRE_THAT(text, Catch::Matchers::ContainsSubstring("result: FAIL"));
        REQUIRE_THAT(text,
                     Catch::Matchers::ContainsSubstring("witness: unexpected solution (1, 1, 1-i)"));
    }
}

TEST_CASE("equation spec parsing", "[render]") {
    SECTION("catalog ids") {
        const auto job = parse_equation_spec<big_int>("szabo");
        REQUIRE(job.id == "szabo");
        REQUIRE_FALSE(job.is_z4);
        REQUIRE(job.form == "X^4 + Y^4 = iZ^2");
        REQUIRE(job.eq.a == G{1});
        REQUIRE(job.eq.b == G{0});
        REQUIRE(job.eq.c == G{1});
        REQUIRE(job.eq.d == G{0, 1});
        for (const char* id : {"fermat", "fermat_1pi", "mordell", "mordell_neg", "mordell_2i",
                               "mordell_2i_neg"}) {
            const auto j = parse_equation_spec<big_int>(id);
            REQUIRE(j.id == id);
            REQUIRE_FALSE(j.is_z4);
            REQUIRE(j.form == quartic_form_text(*parse_quartic_id(id)));
        }
    }
    SECTION("biquadratic ids") {
        const auto ji = parse_equation_spec<big_int>("z4_i");
        REQUIRE(ji.is_z4);
        REQUIRE(ji.eps == G{0, 1});
        REQUIRE(ji.form == "X^4 + iY^2 = Z^4");
        const auto jp = parse_equation_spec<big_int>("z4_1pi");
        REQUIRE(jp.is_z4);
        REQUIRE(jp.eps == G{1, 1});
        REQUIRE(jp.form == "X^4 + (1+i)Y^2 = Z^4");
    }
    SECTION("custom coefficient lists") {
        const auto job = parse_equation_spec<big_int>("1,0,1,i");
        REQUIRE(job.id == "custom");
        REQUIRE(job.eq.a == G{1});
        REQUIRE(job.eq.b == G{0});
        REQUIRE(job.eq.c == G{1});
        REQUIRE(job.eq.d == G{0, 1});
        REQUIRE(job.form == "(1)X^4 + (0)X^2Y^2 + (1)Y^4 = (i)Z^2");
        const auto j2 = parse_equation_spec<big_int>("1,6+6i,2i,1");
        REQUIRE(j2.eq.b == G{6, 6});
        REQUIRE(j2.eq.c == G{0, 2});
    }
    SECTION("rejected specs") {
        REQUIRE_THROWS_AS(parse_equation_spec<big_int>("bogus"), std::invalid_argument);
        REQUIRE_THROWS_AS(parse_equation_spec<big_int>("1,2,3"), std::invalid_argument);
        REQUIRE_THROWS_AS(parse_equation_spec<big_int>("1,2,3,4,5"), std::invalid_argument);
        REQUIRE_THROWS_AS(parse_equation_spec<big_int>("1,2,3,x"), std::invalid_argument);
        REQUIRE_THROWS_AS(parse_equation_spec<big_int>(""), std::invalid_argument);
    }
}

TEST_CASE("renderers", "[render]") {
    auto job = parse_equation_spec<big_int>("szabo");
    job.bound = 4;
    const auto res = run_search(job);
    REQUIRE(res.records.size() == 32);
    REQUIRE(res.orbits.size() == 1);

    SECTION("json schema and key order") {
        const auto s = render_json(job, res);
        REQUIRE(s.back() == '\n');
        const auto j = nlohmann::json::parse(s);
        REQUIRE(j["equation"]["id"] == "szabo");
        REQUIRE(j["equation"]["form"] == "X^4 + Y^4 = iZ^2");
        REQUIRE(j["equation"]["a"] == "1");
        REQUIRE(j["equation"]["b"] == "0");
        REQUIRE(j["equation"]["c"] == "1");
        REQUIRE(j["equation"]["d"] == "i");
        REQUIRE(j["bound"] == 4);
        REQUIRE(j["raw_count"] == 32);
        REQUIRE(j["orbits"].size() == 1);
        REQUIRE(j["orbits"][0]["representative"]["x"] == "-1");
        REQUIRE(j["orbits"][0]["representative"]["y"] == "-1");
        REQUIRE(j["orbits"][0]["representative"]["z"] == "-1+i");
        REQUIRE(j["orbits"][0]["size"] == 32);
        REQUIRE(s.find("\"equation\"") < s.find("\"bound\""));
        REQUIRE(s.find("\"bound\"") < s.find("\"orbits\""));
        REQUIRE(s.find("\"orbits\"") < s.find("\"raw_count\""));
    }
    SECTION("json for the biquadratic form carries eps") {
        auto zjob = parse_equation_spec<big_int>("z4_i");
        zjob.bound = 2;
        const auto zres = run_search(zjob);
        const auto j = nlohmann::json::parse(render_json(zjob, zres));
        REQUIRE(j["equation"]["eps"] == "i");
        REQUIRE_FALSE(j["equation"].contains("a"));
        REQUIRE(j["raw_count"] == 0);
        REQUIRE(j["orbits"].empty());
    }
    SECTION("csv") {
        const auto s = render_csv(job, res);
        REQUIRE(s.rfind("x,y,z,primitive,orbit_id\n", 0) == 0);
        REQUIRE_THAT(s, Catch::Matchers::ContainsSubstring(
                            "-1,-1,-1+i,1,\"(-1, -1, -1+i)\"\n"));
        REQUIRE(std::count(s.begin(), s.end(), '\n') == 33); // header + 32 records
    }
    SECTION("text") {
        const auto s = render_text(job, res);
        REQUIRE_THAT(s, Catch::Matchers::ContainsSubstring("equation: X^4 + Y^4 = iZ^2 [szabo]"));
        REQUIRE_THAT(s, Catch::Matchers::ContainsSubstring("raw solutions: 32"));
        REQUIRE_THAT(s, Catch::Matchers::ContainsSubstring("orbit (-1, -1, -1+i) size 32"));
    }
    SECTION("json bytes are identical across worker counts") {
        const auto one = render_json(job, res);
        for (int workers : {4, 8}) {
            auto wjob = job;
            wjob.workers = workers;
            REQUIRE(render_json(wjob, run_search(wjob)) == one);
        }
    }
    SECTION("claim report text") {
        const auto rep = verify_theorem("3.1", 4);
        REQUIRE(render_report_text(rep) ==
                "claim 3.1: no nontrivial solutions over Z[i]\n"
                "equation: X^4 + Y^4 = Z^2\n"
                "bound: 4\n"
                "raw solutions: 0, orbits: 0\n"
                "result: PASS\n");
    }
}

TEST_CASE("self-test harness", "[selftest]") {
    SECTION("default run passes every suite") {
        const auto rep = run_selftest();
        REQUIRE(rep.suites.size() == 6);
        REQUIRE(rep.all_pass());
        const std::vector<std::string> names{"gcd-oracle",
                                             "nu-additivity",
                                             "monoid-laws",
                                             "parametrization-completeness",
                                             "discriminant-identity",
                                             "round-trips"};
        for (std::size_t k = 0; k < names.size(); ++k) {
            REQUIRE(rep.suites[k].name == names[k]);
            REQUIRE(rep.suites[k].pass);
            REQUIRE(rep.suites[k].checks > 0);
        }
        REQUIRE_THAT(rep.to_text(), Catch::Matchers::ContainsSubstring("selftest: PASS"));
        REQUIRE_THAT(rep.to_text(), Catch::Matchers::ContainsSubstring("[PASS] gcd-oracle"));
    }
    SECTION("a broken gcd is caught by the oracle suite and only there") {
        selftest_options opt;
        opt.gcd_impl = [](const G&, const G&) { return G{1}; };
        const auto rep = run_selftest(opt);
        REQUIRE_FALSE(rep.all_pass());
        REQUIRE_FALSE(rep.suites[0].pass);
        REQUIRE_THAT(rep.suites[0].detail,
                     Catch::Matchers::ContainsSubstring("divisor oracle says"));
        for (std::size_t k = 1; k < rep.suites.size(); ++k) REQUIRE(rep.suites[k].pass);
        REQUIRE_THAT(rep.to_text(), Catch::Matchers::ContainsSubstring("[FAIL] gcd-oracle"));
        REQUIRE_THAT(rep.to_text(), Catch::Matchers::ContainsSubstring("selftest: FAIL"));
    }
    SECTION("seeds change the samples, not the verdict") {
        selftest_options opt;
        opt.seed = 123;
        REQUIRE(run_selftest(opt).all_pass());
    }
}
