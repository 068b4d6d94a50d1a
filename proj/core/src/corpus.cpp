#include "paritylab/corpus.hpp"

#include <atomic>
#include <ctime>
#include <fstream>
#include <thread>

namespace paritylab {

using nlohmann::json;

std::vector<CurveContext> generate(const CorpusSpec& spec, SkipCounts& skips) {
    std::vector<CurveContext> out;
    if (spec.family == "two") {
        for (long a = spec.a_lo; a <= spec.a_hi; ++a) {
            for (long b = spec.b_lo; b <= spec.b_hi; ++b) {
                ++skips.total_candidates;
                TwoIsogenyPair pair;
                try {
                    pair = two_isogeny_pair(Rat(a), Rat(b));
                } catch (const DegenerateFamily&) {
                    ++skips.degenerate;
                    continue;
                }
                CurveContext c;
                c.id = "two(" + std::to_string(a) + "," + std::to_string(b) + ")";
                c.ctx = context_of(pair);
                c.a = a;
                c.b = b;
                out.push_back(std::move(c));
            }
        }
    } else if (spec.family == "three") {
        for (long a1 = spec.a_lo; a1 <= spec.a_hi; ++a1) {
            for (long a3 = spec.b_lo; a3 <= spec.b_hi; ++a3) {
                for (long tw : spec.twists) {
                    ++skips.total_candidates;
                    if (a3 == 0 || tw == 0 || a1 * a1 * a1 == 27 * a3) {
                        ++skips.degenerate;
                        continue;
                    }
                    // Tate normal form y^2 + a1 xy + a3 y = x^3; (0,0) has
                    // order 3, so x = 0 is a kernel on the twisted model too.
                    Model base{Rat(a1), Rat(0), Rat(a3), Rat(0), Rat(0)};
                    Model twisted = quadratic_twist(base, Int(tw));
                    ThreeIsogenyData iso;
                    try {
                        iso = three_isogeny(twisted, Rat(0));
                    } catch (const Error&) {
                        ++skips.degenerate;
                        continue;
                    }
                    if (tate_algorithm(iso.base, 3).cls == ReductionClass::Additive) {
                        ++skips.additive_at_3;
                        continue;
                    }
                    CurveContext c;
                    c.id = "three(" + std::to_string(a1) + "," + std::to_string(a3) +
                           ";" + std::to_string(tw) + ")";
                    c.ctx = context_of(iso);
                    c.a1 = a1;
                    c.a3 = a3;
                    c.twist = tw;
                    out.push_back(std::move(c));
                }
            }
        }
    } else {
        throw Error("unknown family: " + spec.family);
    }
    if (out.empty()) throw EmptyCorpus();
    return out;
}

CurveVerdict verify_curve(const CurveContext& curve, unsigned long seed, bool with_oracle) {
    CurveVerdict v;
    v.curve = curve;
    try {
        v.global = global_check(curve.ctx, seed);
        v.pass = v.global.pass;
        if (with_oracle && curve.ctx.p == 2) {
            TwoIsogenyPair pair = two_isogeny_pair(curve.ctx.a, curve.ctx.b);
            SelmerGroup sphi = selmer_group(pair, Direction::Phi);
            SelmerGroup sphihat = selmer_group(pair, Direction::PhiHat);
            v.selmer_phi = sphi.classes;
            v.selmer_phihat = sphihat.classes;
            v.oracle = (sphihat.dimension - sphi.dimension) % 2 ? -1 : 1;
            if (v.oracle != v.global.S) v.pass = false;
        }
    } catch (const Error& e) {
        v.error = e.what();
        v.pass = false;
    }
    return v;
}

nlohmann::json model_json(const Model& m) {
    return json{{"a1", rat_to_string(m.a1)}, {"a2", rat_to_string(m.a2)},
                {"a3", rat_to_string(m.a3)}, {"a4", rat_to_string(m.a4)},
                {"a6", rat_to_string(m.a6)}};
}

Model model_from_json(const nlohmann::json& j) {
    auto get = [&](const char* k) { return rat_from_string(j.at(k).get<std::string>()); };
    return Model{get("a1"), get("a2"), get("a3"), get("a4"), get("a6")};
}

nlohmann::json reduction_json(const LocalReduction& r) {
    return json{{"l", r.l},
                {"kodaira", r.kodaira.str()},
                {"c", r.tamagawa},
                {"vDelta", r.v_delta_min},
                {"class", to_string(r.cls)}};
}

nlohmann::json report_json(const LocalParityReport& r) {
    json flags = json::array();
    if (r.formula_defined_w) flags.push_back("formula-defined-w");
    if (r.single_path_sigma) flags.push_back("single-path-sigma");
    json j{{"place", r.place.finite ? std::to_string(r.place.l) : "oo"},
           {"sigma", r.sigma},
           {"c_ratio_ord", r.c_ratio_ord},
           {"alpha_val", r.alpha_val},
           {"artin", r.artin},
           {"delta", r.delta_factor},
           {"hilbert_pair", r.hilbert_pair},
           {"hypothesis_ok", r.hypothesis_ok},
           {"identity", r.identity_holds},
           {"flags", flags}};
    if (r.hypothesis_ok) {
        j["w"] = r.w;
        j["w_path"] = r.w_path;
    }
    if (r.place.finite) {
        j["kodaira"] = r.kodaira;
        j["class"] = r.cls;
    }
    return j;
}

nlohmann::json verdict_json(const CurveVerdict& v) {
    json j{{"id", v.curve.id}, {"p", v.curve.ctx.p}, {"pass", v.pass}};
    if (v.curve.ctx.p == 2) {
        j["a"] = v.curve.a;
        j["b"] = v.curve.b;
    } else {
        j["a1"] = v.curve.a1;
        j["a3"] = v.curve.a3;
        j["twist"] = v.curve.twist;
    }
    j["curve"] = model_json(v.curve.ctx.curve);
    j["image"] = model_json(v.curve.ctx.image);
    if (!v.error.empty()) {
        j["error"] = v.error;
        return j;
    }
    json places = json::array();
    for (const LocalParityReport& r : v.global.places) places.push_back(report_json(r));
    j["places"] = places;
    j["support"] = v.global.support;
    j["spot_check"] = v.global.spot_check;
    j["S"] = v.global.S;
    if (v.global.w_complete) j["W"] = v.global.W;
    if (v.curve.ctx.p == 3) {
        j["corollary"] = v.global.corollary;
        j["artin_product"] = v.global.artin_product;
    } else {
        j["hilbert_pair_product"] = v.global.hilbert_pair_product;
    }
    if (!v.selmer_phi.empty()) {
        json sp = json::array(), sph = json::array();
        for (const Int& d : v.selmer_phi) sp.push_back(d.get_si());
        for (const Int& d : v.selmer_phihat) sph.push_back(d.get_si());
        j["selmer_phi"] = sp;
        j["selmer_phihat"] = sph;
        j["oracle"] = v.oracle;
    }
    return j;
}

RunSummary run_corpus(const CorpusSpec& spec, const std::string& out_jsonl,
                      const std::string& out_csv, bool fail_fast, int jobs) {
    RunSummary sum;
    std::vector<CurveContext> curves = generate(spec, sum.skips);
    sum.total = static_cast<long>(curves.size());

    std::vector<CurveVerdict> verdicts(curves.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> stop{false};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= curves.size() || stop.load()) return;
            unsigned long seed = spec.seed ^ (0x9e3779b97f4a7c15ULL * (i + 1));
            verdicts[i] = verify_curve(curves[i], seed, spec.with_oracle);
            if (fail_fast && !verdicts[i].pass) stop.store(true);
        }
    };
    int n = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    size_t done = stop.load() ? std::min<size_t>(next.load(), curves.size())
                              : curves.size();
    std::ofstream jf, cf;
    if (!out_jsonl.empty()) {
        jf.open(out_jsonl);
        if (!jf) throw Error("cannot open " + out_jsonl);
        jf << json{{"header", true},
                   {"family", spec.family},
                   {"seed", spec.seed},
                   {"timestamp", static_cast<long>(::time(nullptr))}}
                  .dump()
           << "\n";
    }
    if (!out_csv.empty()) {
        cf.open(out_csv);
        if (!cf) throw Error("cannot open " + out_csv);
        cf << "id,pass,S,W,oracle,places,failures,error\n";
    }
    for (size_t i = 0; i < done; ++i) {
        const CurveVerdict& v = verdicts[i];
        if (v.curve.id.empty()) continue; // fail-fast left it unverified
        if (!v.error.empty())
            ++sum.errored;
        else if (v.pass)
            ++sum.passed;
        else
            ++sum.failed;
        if (v.error.empty() && !v.global.w_complete) ++sum.hypothesis_limited;
        if (jf) jf << verdict_json(v).dump() << "\n";
        if (cf) {
            cf << v.curve.id << "," << (v.pass ? 1 : 0) << "," << v.global.S << ","
               << (v.global.w_complete ? std::to_string(v.global.W) : "") << ","
               << (v.oracle ? std::to_string(v.oracle) : "") << ","
               << v.global.places.size() << "," << v.global.failures.size() << ","
               << v.error << "\n";
        }
        if (fail_fast && !v.pass) break;
    }
    return sum;
}

} // namespace paritylab
