// Command-line front end: norm-form arithmetic, divisor-relation certificates,
// order elements, conjugacy decisions, class counts, and bulk verification.
//
// Exit codes: 0 = answered; 2 = search bound exhausted (honest "unknown");
// 1 = bad input or internal failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "loq/atkin_lehner.hpp"
#include "loq/bezout.hpp"
#include "loq/classify.hpp"
#include "loq/eisenstein.hpp"
#include "loq/order3.hpp"
#include "loq/qforms.hpp"
#include "loq/quaternion.hpp"

namespace {

using loq::Int;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnknown = 2;

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
}

std::vector<Int> parse_int_list(const std::string& s, std::size_t expected) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
    if (out.size() != expected) {
        throw std::invalid_argument("expected " + std::to_string(expected) +
                                    " comma-separated integers, got '" + s + "'");
    }
    return out;
}

std::string eis_str(const loq::EisensteinInt& z) { return z.a.str() + " + " + z.b.str() + "*w"; }

std::string coords_str(const loq::OrderElement& e) {
    return "(" + e.x1.str() + ", " + e.x2.str() + ", " + e.x3.str() + ", " + e.x4.str() + ")";
}

json eis_json(const loq::EisensteinInt& z) { return json{z.a.str(), z.b.str()}; }

json cert_json(const loq::BezoutCertificate& c) {
    return json{
        {"d_prime", c.d_prime.str()}, {"d_dprime", c.d_dprime.str()}, {"swapped", c.swapped},
        {"epsilon", c.epsilon},       {"u", c.u.str()},               {"v", c.v.str()},
        {"x", eis_json(c.x)},         {"y", eis_json(c.y)},
    };
}

std::string cert_text(const loq::BezoutCertificate& c) {
    const Int& a = c.swapped ? c.d_dprime : c.d_prime;
    const Int& b = c.swapped ? c.d_prime : c.d_dprime;
    std::ostringstream os;
    os << "relation: " << a << "*" << c.u << " - " << b << "*" << c.v << " = " << c.epsilon
       << (c.swapped ? "  (orientation swapped)" : "") << "\n"
       << "  u = " << c.u << " = N(" << eis_str(c.x) << ")\n"
       << "  v = " << c.v << " = N(" << eis_str(c.y) << ")\n";
    return os.str();
}

// Shared output options: --format text|json|csv, --output FILE.
struct Sink {
    std::string format = "text";
    std::string path;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
        cmd->add_option("--output", path, "write the result to a file instead of stdout");
    }

    void write(const std::string& body) const {
        if (path.empty()) {
            std::cout << body;
            return;
        }
        std::ofstream f(path);
        if (!f) throw std::invalid_argument("cannot open output file '" + path + "'");
        f << body;
    }

    // csv_body empty means the subcommand has no tabular form.
    void emit(const std::string& text_body, const json& j, const std::string& csv_body = "") const {
        if (format == "json") {
            write(j.dump(2) + "\n");
        } else if (format == "csv") {
            if (csv_body.empty())
                throw std::invalid_argument("--format csv is not supported for this subcommand");
            write(csv_body);
        } else {
            write(text_body);
        }
    }
};

unsigned default_jobs() {
    if (const char* env = std::getenv("LOQ_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

void write_checkpoint(const std::string& path, const Int& through) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp);
        if (!f) throw std::invalid_argument("cannot write checkpoint file '" + tmp + "'");
        f << through << "\n";
    }
    std::filesystem::rename(tmp, path);
}

std::optional<Int> read_checkpoint(const std::string& path) {
    std::ifstream f(path);
    if (!f) return std::nullopt;
    std::string line;
    if (!std::getline(f, line) || line.empty()) return std::nullopt;
    return parse_int(line);
}

int run_loeschian(const std::string& n_str, const Sink& sink) {
    const Int n = parse_int(n_str);
    if (n < 0) {
        sink.emit(n.str() + " is negative: not a norm value\n",
                  json{{"n", n.str()}, {"loeschian", false}});
        return kExitOk;
    }
    const auto shape = loq::classify_loeschian(n);
    if (!shape) {
        sink.emit(n.str() + " is not a norm from Z[w]\n",
                  json{{"n", n.str()}, {"loeschian", false}});
        return kExitOk;
    }
    const loq::EisensteinInt z = loq::represent(n);
    json splits = json::array();
    std::ostringstream os;
    os << n << " = N(" << eis_str(z) << ")\n"
       << "  3-exponent: " << shape->three_exp << "\n";
    for (const auto& [p, e] : shape->split_part) {
        os << "  split prime: " << p << "^" << e << "\n";
        splits.push_back(json{{"p", p.str()}, {"e", e}});
    }
    os << "  square cofactor root: " << shape->inert_root << "\n";
    sink.emit(os.str(), json{{"n", n.str()},
                             {"loeschian", true},
                             {"x", eis_json(z)},
                             {"three_exp", shape->three_exp},
                             {"split_part", splits},
                             {"inert_root", shape->inert_root.str()}});
    return kExitOk;
}

int run_bezout(const std::string& dp_str, const std::string& dpp_str, const std::string& mode_str,
               const std::string& bound_str, const Sink& sink) {
    const Int dp = parse_int(dp_str), dpp = parse_int(dpp_str), bound = parse_int(bound_str);
    loq::BezoutMode mode = loq::BezoutMode::Any;
    if (mode_str == "no-three") mode = loq::BezoutMode::NoThree;
    else if (mode_str == "exact-one") mode = loq::BezoutMode::ExactOne;
    else if (mode_str != "any") throw std::invalid_argument("unknown mode '" + mode_str + "'");

    const auto cert = loq::solve(dp, dpp, mode, bound);
    if (!cert) {
        sink.emit("no certificate found within bound " + bound.str() + "\n",
                  json{{"found", false}, {"bound", bound.str()}});
        return kExitUnknown;
    }
    if (!loq::verify(*cert)) throw std::logic_error("produced certificate failed re-verification");
    json j = cert_json(*cert);
    j["found"] = true;
    std::string csv = "d_prime,d_dprime,swapped,epsilon,u,v,x_a,x_b,y_a,y_b\n" + dp.str() + "," +
                      dpp.str() + "," + (cert->swapped ? "1" : "0") + "," +
                      std::to_string(cert->epsilon) + "," + cert->u.str() + "," + cert->v.str() +
                      "," + cert->x.a.str() + "," + cert->x.b.str() + "," + cert->y.a.str() + "," +
                      cert->y.b.str() + "\n";
    sink.emit(cert_text(*cert), j, csv);
    return kExitOk;
}

int run_atkin_lehner(const std::string& d_str, const std::string& dp_str,
                     const std::string& bound_str, unsigned skip, const Sink& sink) {
    const Int d = parse_int(d_str), dp = parse_int(dp_str), bound = parse_int(bound_str);
    const auto al = loq::build(d, dp, bound, skip);
    if (!al) {
        sink.emit("no element found within bound " + bound.str() + "\n",
                  json{{"found", false}, {"bound", bound.str()}});
        return kExitUnknown;
    }
    if (!loq::verify(al->cert) || !loq::check_normalizes(*al))
        throw std::logic_error("produced element failed re-verification");
    std::ostringstream os;
    os << "w = " << coords_str(al->w) << ", Nr(w) = " << (al->epsilon * al->d_prime) << "\n"
       << "w^2 = " << al->d_prime << " * q, q = " << coords_str(al->q) << ", Nr(q) = 1\n"
       << cert_text(al->cert);
    sink.emit(os.str(), json{{"found", true},
                             {"d", d.str()},
                             {"d_prime", al->d_prime.str()},
                             {"d_dprime", al->d_dprime.str()},
                             {"epsilon", al->epsilon},
                             {"w", {al->w.x1.str(), al->w.x2.str(), al->w.x3.str(), al->w.x4.str()}},
                             {"q", {al->q.x1.str(), al->q.x2.str(), al->q.x3.str(), al->q.x4.str()}},
                             {"certificate", cert_json(al->cert)}});
    return kExitOk;
}

int run_order3(const std::string& d_str, const std::string& bound_str, const Sink& sink) {
    const Int d = parse_int(d_str), bound = parse_int(bound_str);
    const auto elems = loq::enumerate_elements(d, bound);
    std::ostringstream os;
    json arr = json::array();
    for (const auto& e : elems) {
        os << coords_str(e.elem) << "  invariants (" << e.d_prime << ", " << e.d_dprime
           << ")  product " << (e.tag == loq::CaseTag::Full ? "d" : "d/3") << "\n";
        arr.push_back(loq::to_json(e));
    }
    os << elems.size() << " element(s) with |x1| <= " << bound << " (or x1 = -(m+1))\n";
    std::string csv = "x1,x2,x3,x4,d_prime,d_dprime,stratum\n";
    for (const auto& e : elems) {
        csv += e.elem.x1.str() + "," + e.elem.x2.str() + "," + e.elem.x3.str() + "," +
               e.elem.x4.str() + "," + e.d_prime.str() + "," + e.d_dprime.str() + "," +
               (e.tag == loq::CaseTag::Full ? "full" : "third") + "\n";
    }
    sink.emit(os.str(), json{{"d", d.str()}, {"count", elems.size()}, {"elements", arr}}, csv);
    return kExitOk;
}

int run_conjugate(const std::string& d_str, const std::string& xi_str, const std::string& eta_str,
                  const Sink& sink) {
    const Int d = parse_int(d_str);
    const auto xc = parse_int_list(xi_str, 4);
    const auto ec = parse_int_list(eta_str, 4);
    const loq::Order3Element xi = loq::from_order({d, xc[0], xc[1], xc[2], xc[3]});
    const loq::Order3Element eta = loq::from_order({d, ec[0], ec[1], ec[2], ec[3]});
    const auto w = loq::conjugacy_witness(xi, eta);
    if (!w) {
        std::ostringstream os;
        os << "not conjugate by any unit of the order\n"
           << "  invariants: (" << xi.d_prime << ", " << xi.d_dprime << ") vs (" << eta.d_prime
           << ", " << eta.d_dprime << ")\n";
        sink.emit(os.str(), json{{"conjugate", false},
                                 {"xi_invariants", {xi.d_prime.str(), xi.d_dprime.str()}},
                                 {"eta_invariants", {eta.d_prime.str(), eta.d_dprime.str()}}});
        return kExitOk;
    }
    const Int n = loq::nr(w->alpha);
    std::ostringstream os;
    os << "conjugate: alpha = " << coords_str(w->alpha) << ", Nr(alpha) = " << n << "\n"
       << "  eta * alpha = alpha * xi\n";
    sink.emit(os.str(),
              json{{"conjugate", true},
                   {"alpha", {w->alpha.x1.str(), w->alpha.x2.str(), w->alpha.x3.str(),
                              w->alpha.x4.str()}},
                   {"nr", n.str()}});
    return kExitOk;
}

int run_count(const std::string& d_str, const std::string& bound_str, const Sink& sink) {
    const Int d = parse_int(d_str), bound = parse_int(bound_str);
    const loq::ClassReport rep = loq::count_classes(d, bound);
    std::ostringstream os;
    os << "d = " << d << ", " << rep.r << " distinct prime(s), case " << case_name(rep.cd_case)
       << "\n";
    if (rep.conjugacy_classes)
        os << "conjugacy classes: " << *rep.conjugacy_classes
           << " (cyclic subgroups: " << *rep.subgroup_classes << ")\n";
    else
        os << "conjugacy classes: unknown (bound exhausted)\n";
    os << "product-d/3 stratum: " << status_name(rep.third_status) << "\n";
    for (const auto& c : rep.representatives) {
        os << "  (" << c.d_prime << ", " << c.d_dprime << ")" << (c.star ? "*" : " ") << "  "
           << coords_str(c.elem.elem) << "\n";
    }
    sink.emit(os.str(), loq::to_json(rep), loq::csv_header() + "\n" + loq::to_csv_row(rep) + "\n");
    return rep.third_status == loq::ThirdStatus::Unknown ? kExitUnknown : kExitOk;
}

int run_verify_conj2(const std::string& lo_str, const std::string& hi_str,
                     const std::string& bound_str, unsigned jobs, const std::string& resume,
                     const Sink& sink) {
    Int lo = parse_int(lo_str);
    const Int hi = parse_int(hi_str), bound = parse_int(bound_str);

    if (lo == hi) {
        const loq::DivisibilityWitness w = loq::verify_conjecture2(lo, bound);
        std::ostringstream os;
        if (w.verified)
            os << "d* = " << lo << ": u = " << w.pair->first << ", v = " << w.pair->second
               << " (u - 3*d**v = 1, both norms, 3 coprime to uv)\n";
        else
            os << "d* = " << lo << ": no witness within bound " << bound << "\n";
        sink.emit(os.str(), loq::to_json(w));
        return w.verified ? kExitOk : kExitUnknown;
    }

    if (!resume.empty()) {
        if (const auto done_through = read_checkpoint(resume)) {
            Int next = *done_through + 1;
            if (next > lo) lo = next;
        }
    }
    if (lo > hi) {
        sink.emit("nothing to do (checkpoint already covers the range)\n",
                  json{{"verified", 0}, {"unknown", json::array()}});
        return kExitOk;
    }
    const auto progress = [&resume](const Int& through) {
        if (!resume.empty()) write_checkpoint(resume, through);
    };
    const loq::SweepResult res = loq::verify_conjecture2_range(lo, hi, bound, jobs, progress);
    if (!resume.empty() && res.unknown.empty()) write_checkpoint(resume, hi);

    std::ostringstream os;
    os << "range [" << lo << ", " << hi << "]: " << res.verified << " value(s) verified, "
       << res.unknown.size() << " unknown\n";
    json unk = json::array();
    for (const Int& x : res.unknown) {
        os << "  unknown: " << x << "\n";
        unk.push_back(x.str());
    }
    std::string csv = "lo,hi,verified,unknown\n" + lo.str() + "," + hi.str() + "," +
                      std::to_string(res.verified) + "," + std::to_string(res.unknown.size()) +
                      "\n";
    sink.emit(os.str(),
              json{{"lo", lo.str()},
                   {"hi", hi.str()},
                   {"bound", bound.str()},
                   {"verified", res.verified},
                   {"unknown", unk}},
              csv);
    return res.unknown.empty() ? kExitOk : kExitUnknown;
}

int run_pell(const std::string& d_str, const Sink& sink) {
    const Int d = parse_int(d_str);
    const loq::PellCriterion crit = loq::pell_criterion(d);
    const Int dt = d / 3;
    std::ostringstream os;
    json j{{"d", d.str()}, {"d_over_3", dt.str()}};
    os << "d = " << d << ", d/3 = " << dt << "\n";
    if (loq::is_square(dt)) {
        os << "d/3 is a perfect square: no Pell solutions\n";
        j["criterion"] = "inapplicable";
        j["reason"] = "square";
    } else {
        const loq::PellSolution sol = loq::pell_min_solution(dt);
        os << "minimal solution of X^2 - " << dt << " Y^2 = 1: (" << sol.x0 << ", " << sol.y0
           << ")\n";
        j["x0"] = sol.x0.str();
        j["y0"] = sol.y0.str();
        if (crit == loq::PellCriterion::True) {
            os << "3 does not divide y0: criterion satisfied\n";
            j["criterion"] = "true";
        } else {
            os << "3 divides y0: criterion inapplicable\n";
            j["criterion"] = "inapplicable";
        }
    }
    sink.emit(os.str(), j);
    return kExitOk;
}

int run_membership(const std::string& d_str, const std::string& bound_str, const Sink& sink) {
    const Int d = parse_int(d_str), bound = parse_int(bound_str);
    const loq::GMembership g = loq::g_membership(d, bound);
    std::ostringstream os;
    if (g.result == loq::GMembership::Result::InG) {
        os << d << " is in the family (route: " << g.route << ")\n";
        if (g.witness) os << "  witness: u = " << g.witness->first << ", v = " << g.witness->second << "\n";
    } else {
        os << d << ": membership unknown within bound " << bound << "\n";
    }
    sink.emit(os.str(), loq::to_json(g));
    return g.result == loq::GMembership::Result::InG ? kExitOk : kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational toolkit for norm-form arithmetic and order-3 conjugacy"};
    app.require_subcommand(1);

    const std::string default_bound = loq::kDefaultSearchBound.str();

    // loeschian
    auto* sc_loe = app.add_subcommand("loeschian", "classify a value under the norm form");
    std::string loe_n;
    sc_loe->add_option("n", loe_n, "nonnegative integer")->required();
    Sink loe_sink;
    loe_sink.add_options(sc_loe);

    // bezout
    auto* sc_bez = app.add_subcommand("bezout", "solve d'*u - d''*v = +-1 in norm-form values");
    std::string bez_dp, bez_dpp, bez_mode = "any", bez_bound = default_bound;
    sc_bez->add_option("d_prime", bez_dp)->required();
    sc_bez->add_option("d_dprime", bez_dpp)->required();
    sc_bez->add_option("--mode", bez_mode, "any | no-three | exact-one")
        ->check(CLI::IsMember({"any", "no-three", "exact-one"}))
        ->capture_default_str();
    sc_bez->add_option("--bound", bez_bound, "search bound on v")->capture_default_str();
    Sink bez_sink;
    bez_sink.add_options(sc_bez);

    // atkin-lehner
    auto* sc_al = app.add_subcommand("atkin-lehner", "normalizing element for a Hall divisor");
    std::string al_d, al_dp, al_bound = default_bound;
    unsigned al_skip = 0;
    sc_al->add_option("--d", al_d)->required();
    sc_al->add_option("--dprime", al_dp, "Hall divisor of d")->required();
    sc_al->add_option("--bound", al_bound)->capture_default_str();
    sc_al->add_option("--skip", al_skip, "skip the first K certificates");
    Sink al_sink;
    al_sink.add_options(sc_al);

    // order3
    auto* sc_o3 = app.add_subcommand("order3", "enumerate order-3 elements up to conjugation data");
    std::string o3_d, o3_bound = "25";
    sc_o3->add_option("--d", o3_d)->required();
    sc_o3->add_option("--bound", o3_bound, "enumerate x1 in {m, -(m+1) : 0 <= m <= bound}")
        ->capture_default_str();
    Sink o3_sink;
    o3_sink.add_options(sc_o3);

    // conjugate
    auto* sc_cj = app.add_subcommand("conjugate", "decide conjugacy of two order-3 elements");
    std::string cj_d, cj_xi, cj_eta;
    sc_cj->add_option("--d", cj_d)->required();
    sc_cj->add_option("--xi", cj_xi, "coordinates x1,x2,x3,x4")->required();
    sc_cj->add_option("--eta", cj_eta, "coordinates x1,x2,x3,x4")->required();
    Sink cj_sink;
    cj_sink.add_options(sc_cj);

    // count
    auto* sc_ct = app.add_subcommand("count", "count conjugacy classes of order-3 elements");
    std::string ct_d, ct_bound = default_bound;
    sc_ct->add_option("--d", ct_d)->required();
    sc_ct->add_option("--bound", ct_bound)->capture_default_str();
    Sink ct_sink;
    ct_sink.add_options(sc_ct);

    // verify-conj2
    auto* sc_v2 = app.add_subcommand("verify-conj2",
                                     "search witnesses u - 3 d* v = 1 over a range of d*");
    std::string v2_lo, v2_hi, v2_bound = default_bound, v2_resume;
    unsigned v2_jobs = default_jobs();
    sc_v2->add_option("--dstar-min", v2_lo)->required();
    sc_v2->add_option("--dstar-max", v2_hi)->required();
    sc_v2->add_option("--bound", v2_bound)->capture_default_str();
    sc_v2->add_option("--jobs", v2_jobs, "worker threads (default: LOQ_JOBS or hardware)");
    sc_v2->add_option("--resume", v2_resume, "checkpoint file (records last completed d*)");
    Sink v2_sink;
    v2_sink.add_options(sc_v2);

    // pell
    auto* sc_pl = app.add_subcommand("pell", "minimal X^2 - (d/3) Y^2 = 1 and the 3 | y0 test");
    std::string pl_d;
    sc_pl->add_option("--d", pl_d, "positive multiple of 9")->required();
    Sink pl_sink;
    pl_sink.add_options(sc_pl);

    // membership
    auto* sc_gm = app.add_subcommand("membership", "decide the product-d/3 realizability family");
    std::string gm_d, gm_bound = default_bound;
    sc_gm->add_option("--d", gm_d)->required();
    sc_gm->add_option("--bound", gm_bound)->capture_default_str();
    Sink gm_sink;
    gm_sink.add_options(sc_gm);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc_loe->parsed()) return run_loeschian(loe_n, loe_sink);
        if (sc_bez->parsed()) return run_bezout(bez_dp, bez_dpp, bez_mode, bez_bound, bez_sink);
        if (sc_al->parsed()) return run_atkin_lehner(al_d, al_dp, al_bound, al_skip, al_sink);
        if (sc_o3->parsed()) return run_order3(o3_d, o3_bound, o3_sink);
        if (sc_cj->parsed()) return run_conjugate(cj_d, cj_xi, cj_eta, cj_sink);
        if (sc_ct->parsed()) return run_count(ct_d, ct_bound, ct_sink);
        if (sc_v2->parsed())
            return run_verify_conj2(v2_lo, v2_hi, v2_bound, v2_jobs, v2_resume, v2_sink);
        if (sc_pl->parsed()) return run_pell(pl_d, pl_sink);
        if (sc_gm->parsed()) return run_membership(gm_d, gm_bound, gm_sink);
    } catch (const loq::FactorizationExhausted& e) {
        std::cerr << "unknown: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
