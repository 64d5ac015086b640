// tatekit: command-line front end.
//
// Exit codes: 0 ok, 1 the checked property fails (suite violations, a
// lattice check that fails, a refuted lifting), 2 usage or input errors.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tatekit/errors.hpp"
#include "tatekit/geometry.hpp"
#include "tatekit/io.hpp"
#include "tatekit/lattice.hpp"
#include "tatekit/liftings.hpp"
#include "tatekit/operator.hpp"
#include "tatekit/plot.hpp"
#include "tatekit/suite.hpp"

using namespace tatekit;
using io::Json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inline JSON when the argument starts with '{' or '[', "-" for stdin,
// otherwise a file path.
Json load(const std::string& arg, const std::string& what) {
    auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return io::parse_text(arg, what);
    std::stringstream ss;
    if (arg == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(arg);
        if (!in) throw UsageError("cannot read " + what + " from '" + arg + "'");
        ss << in.rdbuf();
    }
    return io::parse_text(ss.str(), what);
}

std::vector<std::int64_t> int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("expected comma-separated integers, got '" + text + "'");
        }
    }
    return out;
}

struct Out {
    std::string format = "text";
    bool json() const { return format == "json"; }
    void emit(const std::string& text, const Json& j) const {
        if (json()) std::cout << j.dump(2) << "\n";
        else std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
    }
};

std::string slice_text(const Slice& s) {
    if (auto y = std::get_if<Sym>(&s)) return *y == Sym::Zero ? "0" : "FULL";
    return std::get<SubspaceRef>(s)->to_string();
}

std::string model_text(const CompletionModel& m) {
    std::ostringstream os;
    os << "completion of F_" << m.p << "[x] at (" << io::poly_to_string(m.f) << "), precision pi^" << m.precision
       << "\n";
    os << "  coefficient field kappa = " << m.kappa->to_string() << "\n";
    os << "  root a = " << io::poly_to_string(m.root) << "  (mod f^" << m.precision << ")\n";
    os << "  f-adic digits: " << m.digits.to_string() << "\n";
    os << "  Newton errors v_f(f(a_k)):";
    for (int e : m.error_exponents) os << " " << e;
    os << "\n";
    return os.str();
}

std::string profile_text(const OpenProfile& v) {
    std::ostringstream os;
    os << "V: rows t2^i with i >= " << v.threshold << " FULL; below, t1^(" << v.base << " + " << v.slope
       << "*i) k[[t1]]";
    for (const auto& [row, lo] : v.exceptions) os << "; row " << row << ": t1^" << lo;
    return os.str();
}

// ------------------------------------------------------------------ config

RunConfig load_config(const std::string& path, const std::optional<std::uint64_t>& seed_flag) {
    RunConfig cfg;
    if (!path.empty()) cfg = run_config_from_json(load(path, "config"));
    if (const char* env = std::getenv("TATEKIT_SEED"); env && *env) {
        try {
            size_t used = 0;
            cfg.seed = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("TATEKIT_SEED must be an unsigned integer, got '") + env + "'");
        }
    }
    if (seed_flag) cfg.seed = *seed_flag;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tatekit: exact computation in n-dimensional local fields"};
    app.require_subcommand(1);
    Out out;
    std::string config_path;
    app.add_option("--format", out.format, "text, json or svg")
        ->check(CLI::IsMember({"text", "json", "svg"}))
        ->capture_default_str();
    app.add_option("--config", config_path, "RunConfig JSON (file or inline)");

    int status = 0;
    std::string a_arg, b_arg, prec_arg;
    std::int64_t hi_top = 2;

    // ---------------------------------------------------------------- series
    auto* series = app.add_subcommand("series", "truncated Laurent series")->require_subcommand(1);
    auto binary = [&](const std::string& name, auto op) {
        auto* c = series->add_subcommand(name, name + " two series");
        c->add_option("--a", a_arg, "series JSON")->required();
        c->add_option("--b", b_arg, "series JSON")->required();
        c->callback([&, op] {
            auto a = io::series_from_json(load(a_arg, "--a"), nullptr, "$a");
            auto b = io::series_from_json(load(b_arg, "--b"), a.spec(), "$b");
            auto r = op(a, b);
            out.emit(r.to_string(), io::to_json(r));
        });
    };
    binary("add", [](const TruncatedSeries& a, const TruncatedSeries& b) { return s_add(a, b); });
    binary("mul", [](const TruncatedSeries& a, const TruncatedSeries& b) { return s_mul(a, b); });
    {
        auto* c = series->add_subcommand("inv", "inverse to a requested precision");
        c->add_option("--a", a_arg)->required();
        c->add_option("--prec", prec_arg, "exclusive bounds h1,...,hn")->required();
        c->callback([&] {
            auto a = io::series_from_json(load(a_arg, "--a"), nullptr, "$a");
            auto r = s_inv(a, int_list(prec_arg));
            out.emit(r.to_string(), io::to_json(r));
        });
        auto* v = series->add_subcommand("val", "lexicographic valuation");
        v->add_option("--a", a_arg)->required();
        v->callback([&] {
            auto a = io::series_from_json(load(a_arg, "--a"), nullptr, "$a");
            auto e = lex_valuation(a);
            out.emit(exponent_to_string(e), Json{{"valuation", e}});
        });
        auto* r = series->add_subcommand("residue", "residue to arity n-1");
        r->add_option("--a", a_arg)->required();
        r->callback([&] {
            auto s = residue(io::series_from_json(load(a_arg, "--a"), nullptr, "$a"));
            out.emit(s.to_string(), io::to_json(s));
        });
        auto* l = series->add_subcommand("lift", "standard lift to arity n+1");
        l->add_option("--a", a_arg)->required();
        l->add_option("--hi", hi_top, "t_{n+1} precision")->capture_default_str();
        l->callback([&] {
            auto s = lift_std(io::series_from_json(load(a_arg, "--a"), nullptr, "$a"), hi_top);
            out.emit(s.to_string(), io::to_json(s));
        });
    }

    // --------------------------------------------------------------- lattice
    auto* lattice = app.add_subcommand("lattice", "monomial subspaces and lattices")->require_subcommand(1);
    auto sub_a = [&] { return io::subspace_from_json(load(a_arg, "--a"), "$a"); };
    auto sub_b = [&] { return io::subspace_from_json(load(b_arg, "--b"), "$b"); };
    auto lat_a = [&] { return io::lattice_from_json(load(a_arg, "--a"), "$a"); };
    auto lat_b = [&] { return io::lattice_from_json(load(b_arg, "--b"), "$b"); };
    {
        auto* c = lattice->add_subcommand("contains", "is B a subspace of A");
        c->add_option("--a", a_arg)->required();
        c->add_option("--b", b_arg)->required();
        c->callback([&] {
            bool v = contains(*sub_a(), *sub_b());
            out.emit(v ? "B <= A" : "B is not contained in A", Json{{"contains", v}});
        });
        for (const char* name : {"meet", "join"}) {
            auto* m = lattice->add_subcommand(name, std::string(name) + " of two lattices");
            m->add_option("--a", a_arg)->required();
            m->add_option("--b", b_arg)->required();
            bool is_meet = std::string(name) == "meet";
            m->callback([&, is_meet] {
                auto r = is_meet ? meet(lat_a(), lat_b()) : join(lat_a(), lat_b());
                out.emit(r.subspace().to_string(), io::to_json(r.subspace()));
            });
        }
        auto* s = lattice->add_subcommand("sandwich", "standard lattices around L");
        s->add_option("--a", a_arg)->required();
        s->callback([&] {
            auto l = lat_a();
            auto [m, M] = sandwich_standard(l);
            std::string t = "t" + std::to_string(l.n());
            out.emit(t + "^" + std::to_string(M) + " O <= L <= " + t + "^" + std::to_string(m) + " O",
                     Json{{"m", m}, {"M", M}});
        });
        auto* q = lattice->add_subcommand("quotient", "graded pieces of A/B for B <= A");
        q->add_option("--a", a_arg, "big lattice")->required();
        q->add_option("--b", b_arg, "small lattice")->required();
        q->callback([&] {
            auto pieces = quotient(lat_a(), lat_b());
            std::ostringstream os;
            Json j = Json::array();
            for (const auto& p : pieces) {
                os << "row " << p.x << ": " << slice_text(p.big) << " / " << slice_text(p.small) << "\n";
                auto sj = [](const Slice& s) -> Json {
                    if (auto y = std::get_if<Sym>(&s)) return *y == Sym::Zero ? "zero" : "full";
                    return io::to_json(*std::get<SubspaceRef>(s));
                };
                j.push_back({{"row", p.x}, {"big", sj(p.big)}, {"small", sj(p.small)}});
            }
            if (pieces.empty()) os << "A = B\n";
            out.emit(os.str(), j);
        });
        auto* k = lattice->add_subcommand("check", "is the subspace a lattice");
        k->add_option("--a", a_arg)->required();
        k->callback([&] {
            auto s = sub_a();
            std::string why;
            bool ok = is_lattice(*s, &why);
            out.emit(ok ? "lattice" : "not a lattice: " + why, Json{{"lattice", ok}, {"reason", why}});
            if (!ok) status = 1;
        });
    }
    std::string plot_kind = "subspace";
    std::vector<std::int64_t> box{-3, 4}, axes{1, 2};
    std::string fixed_arg;
    {
        auto* p = lattice->add_subcommand("plot", "support diagram over a 2-axis box");
        p->add_option("--a", a_arg, "object JSON")->required();
        p->add_option("--kind", plot_kind, "subspace, series or profile")
            ->check(CLI::IsMember({"subspace", "series", "profile"}))
            ->capture_default_str();
        p->add_option("--box", box, "LO HI: plot [LO, HI) on both axes")->expected(2);
        p->add_option("--axes", axes, "X Y (1-based)")->expected(2);
        p->add_option("--fixed", fixed_arg, "other coordinates, comma separated");
        p->callback([&] {
            plot::View v;
            v.lo = box[0];
            v.hi = box[1];
            v.ax = static_cast<int>(axes[0]);
            v.ay = static_cast<int>(axes[1]);
            if (!fixed_arg.empty()) v.fixed = int_list(fixed_arg);
            Json j = load(a_arg, "--a");
            std::function<plot::Cell(std::int64_t)> line;
            plot::Grid g;
            try {
                if (plot_kind == "series") {
                    auto s = io::series_from_json(j, nullptr, "$a");
                    line = [s](std::int64_t x) {
                        auto st = s.status({x});
                        return st == PointStatus::Unknown       ? plot::Cell::Hatched
                               : s.coeff({x}).is_zero() ? plot::Cell::Blank
                                                        : plot::Cell::Shaded;
                    };
                    g = plot::grid_of(s, v);
                } else if (plot_kind == "profile") {
                    g = plot::grid_of(io::profile_from_json(j, "$a"), v);
                } else {
                    auto s = io::subspace_from_json(j, "$a");
                    line = [s](std::int64_t x) { return s->contains_point({x}) ? plot::Cell::Shaded : plot::Cell::Blank; };
                    g = plot::grid_of(*s, v);
                }
            } catch (const ArityUnsupported& e) {
                std::cerr << "ArityUnsupported: " << e.what() << "\n";
                std::cout << plot::number_line(line, v.lo, v.hi);
                return;
            }
            std::cout << (out.format == "svg" ? plot::svg(g) : plot::ascii(g));
        });
    }

    // -------------------------------------------------------------- operator
    auto* op = app.add_subcommand("op", "operators on truncated series")->require_subcommand(1);
    std::string op_arg, x_arg, route = "both";
    int axis = 1, suite_n = 2, samples = 100;
    std::int64_t radius = -1;
    std::optional<std::uint64_t> seed_flag;
    auto load_op = [&] { return io::operator_from_json(load(op_arg, "--op"), "$op"); };
    {
        auto* c = op->add_subcommand("apply", "apply an operator");
        c->add_option("--op", op_arg)->required();
        c->add_option("--x", x_arg)->required();
        c->callback([&] {
            auto f = load_op();
            auto x = io::series_from_json(load(x_arg, "--x"), f.spec(), "$x");
            auto y = apply(f, x);
            out.emit(y.to_string(), io::to_json(y));
        });
        auto* k = op->add_subcommand("classify", "ideal membership per axis");
        k->add_option("--op", op_arg)->required();
        k->add_option("--route", route)->check(CLI::IsMember({"tate", "yek", "both"}))->capture_default_str();
        k->add_option("--radius", radius, "Yekutieli search radius");
        k->callback([&] {
            auto f = load_op();
            RunConfig cfg = load_config(config_path, std::nullopt);
            YekutieliConfig y{radius >= 0 ? radius : cfg.radius};
            std::ostringstream os;
            Json j = Json::object();
            if (route != "yek") {
                auto t = classify_tate(f);
                os << "tate: " << t.to_string() << "\n";
                j["tate"] = io::to_json(t);
            }
            if (route != "tate") {
                auto t = classify_yekutieli(f, y);
                os << "yekutieli (R = " << y.radius << "): " << t.to_string() << "\n";
                j["yekutieli"] = io::to_json(t);
            }
            os << "transfer: " << transfer(f).to_string();
            j["transfer"] = io::to_json(transfer(f));
            out.emit(os.str(), j);
        });
        auto* d = op->add_subcommand("decompose", "split as f+ + f- along an axis");
        d->add_option("--op", op_arg)->required();
        d->add_option("--axis", axis)->capture_default_str();
        d->callback([&] {
            auto f = load_op();
            auto [p, m] = decompose(f, axis);
            out.emit("plus:  " + p.to_string() + "\nminus: " + m.to_string(),
                     Json{{"plus", io::to_json(p)}, {"minus", io::to_json(m)}});
        });
        auto* s = op->add_subcommand("suite", "idempotent axioms for P_i+");
        s->add_option("--n", suite_n)->capture_default_str();
        s->add_option("--seed", seed_flag);
        s->add_option("--samples", samples)->capture_default_str();
        s->callback([&] {
            auto cfg = load_config(config_path, seed_flag);
            auto r = idempotent_suite(suite_n, cfg.seed, samples);
            out.emit(r.to_string(), io::to_json(r));
            if (!r.ok()) status = 1;
        });
    }

    // -------------------------------------------------------------- liftings
    auto* lifting = app.add_subcommand("lifting", "liftings k((t1)) -> k((t1))((t2))")->require_subcommand(1);
    std::string q_preset = "neg-identity", mode = "standard", spec_arg;
    int count = 10, fradius = 10;
    auto lifting_spec = [&]() {
        if (!spec_arg.empty()) return io::lifting_from_json(load(spec_arg, "--spec"), "$spec");
        if (mode == "standard") return LiftingSpec::standard();
        return LiftingSpec::preset(q_preset, count);
    };
    {
        auto* l = lifting->add_subcommand("lift", "lift a series of arity 1");
        l->add_option("--a", a_arg)->required();
        l->add_option("--mode", mode)->check(CLI::IsMember({"standard", "twisted"}))->capture_default_str();
        l->add_option("--Q", q_preset, "twist preset")
            ->check(CLI::IsMember({"neg-identity", "pos-identity", "zero"}))
            ->capture_default_str();
        l->add_option("--count", count, "number of perturbed generators")->capture_default_str();
        l->add_option("--spec", spec_arg, "LiftingSpec JSON instead of --mode/--Q");
        l->callback([&] {
            auto s = lifting_spec();
            auto r = lift(s, io::series_from_json(load(a_arg, "--a"), nullptr, "$a"));
            out.emit(r.to_string(), io::to_json(r));
        });
        auto* f = lifting->add_subcommand("falsify", "search for a lattice violation");
        f->add_option("--Q", q_preset)
            ->check(CLI::IsMember({"neg-identity", "pos-identity", "zero", "standard"}))
            ->capture_default_str();
        f->add_option("--radius", fradius)->capture_default_str();
        f->add_option("--spec", spec_arg, "LiftingSpec JSON instead of --Q");
        f->callback([&] {
            mode = q_preset == "standard" ? "standard" : "twisted";
            auto s = lifting_spec();
            auto v = falsify_tate(s, fradius);
            out.emit(s.to_string() + "\n" + v.to_string(), io::to_json(v));
            if (!v.plausible) status = 1;
        });
    }

    // --------------------------------------------------------------- adeles
    auto* adele = app.add_subcommand("adele", "adelic descriptions")->require_subcommand(1);
    std::int64_t p = 5;
    std::string f_arg = "x^2-2";
    int prec = 8;
    {
        auto* l = adele->add_subcommand("line", "completion of F_p[x] at (f)");
        l->add_option("--p", p)->capture_default_str();
        l->add_option("--f", f_arg)->capture_default_str();
        l->callback([&] {
            auto d = adele_line(p, io::parse_poly(f_arg));
            out.emit(d.to_string(), io::to_json(d));
        });
        auto* pl = adele->add_subcommand("plane", "flag on the affine plane over F_p (p = 0 for Q)");
        pl->add_option("--p", p)->capture_default_str();
        pl->callback([&] {
            auto d = adele_plane_smooth(p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p));
            out.emit(d.to_string(), io::to_json(d));
        });
    }
    auto* hensel = app.add_subcommand("hensel", "coefficient field of F_p[x] completed at (f)");
    hensel->add_option("--p", p)->capture_default_str();
    hensel->add_option("--f", f_arg)->capture_default_str();
    hensel->add_option("--prec", prec)->capture_default_str();
    hensel->callback([&] {
        auto m = hensel_coefficient_field(p, io::parse_poly(f_arg), prec);
        out.emit(model_text(m), io::to_json(m));
    });

    // ----------------------------------------------------------------- demos
    auto* demo = app.add_subcommand("demo", "worked examples")->require_subcommand(1);
    std::vector<std::int64_t> vs{0, 1, 2};
    std::vector<std::int64_t> pbox{-3, 3};
    std::string profile_arg;
    int dradius = 5;
    {
        auto* c = demo->add_subcommand("cusp", "u^v k[[u]] on the cusp s^2 = t^3");
        c->add_option("--v", vs, "valuations to test")->capture_default_str();
        c->callback([&] {
            std::ostringstream os;
            Json j = Json::array();
            os << "semigroup <2, 3>, gaps:";
            for (auto g : semigroup_gaps({2, 3})) os << " " << g;
            os << "\n";
            for (auto v : vs) {
                auto r = cusp_is_beilinson_realizable(MonomialLattice::standard(1, v));
                os << r.to_string() << "\n";
                j.push_back(io::to_json(r));
            }
            out.emit(os.str(), j);
        });
        auto* pa = demo->add_subcommand("parshin", "factor a box of monomials through an open V");
        pa->add_option("--box", pbox, "A B: the box [A, B] on both axes")->expected(2);
        pa->add_option("--profile", profile_arg, "OpenProfile JSON");
        pa->callback([&] {
            OpenProfile V;
            if (!profile_arg.empty()) V = io::profile_from_json(load(profile_arg, "--profile"), "$profile");
            if (pbox[0] > pbox[1]) throw UsageError("--box needs A <= B");
            auto r = parshin_cover(V, {pbox[0], pbox[0]}, {pbox[1] + 1, pbox[1] + 1});
            if (out.format == "svg") {
                plot::View v;
                v.lo = pbox[0] - 12;
                v.hi = pbox[1] + 12;
                std::cout << plot::svg(plot::grid_of(V, v));
            } else if (out.json()) {
                std::cout << Json{{"profile", io::to_json(V)}, {"cover", io::to_json(r)}}.dump(2) << "\n";
            } else {
                plot::View v;
                v.lo = pbox[0] - 12;
                v.hi = pbox[1] + 12;
                std::cout << profile_text(V) << "\n" << plot::ascii(plot::grid_of(V, v)) << r.to_string();
            }
            if (!r.all_verified()) status = 1;
        });
        auto* y = demo->add_subcommand("yekutieli", "the lifting with Q(i) = -i");
        y->add_option("--radius", dradius)->capture_default_str();
        y->callback([&] {
            auto s = LiftingSpec::preset("neg-identity", std::max(dradius, 2));
            auto v = falsify_tate(s, dradius);
            std::set<Exponent> pts;
            for (const auto& [i, img] : generator_images(s, dradius))
                for (const auto& [e, c] : img.terms()) pts.insert(e);
            plot::View view;
            view.lo = -dradius - 2;
            view.hi = dradius + 2;
            auto g = plot::grid_of_points(pts, view, "support of the generator images");
            if (out.format == "svg") std::cout << plot::svg(g);
            else if (out.json()) std::cout << io::to_json(v).dump(2) << "\n";
            else std::cout << s.to_string() << "\n" << v.to_string() << "\n" << plot::ascii(g);
        });
    }

    // ----------------------------------------------------------------- suite
    auto* suite = app.add_subcommand("suite", "property suites")->require_subcommand(1);
    std::string suite_name;
    {
        auto* r = suite->add_subcommand("run", "run a suite: ring, lattice, cubical, agreement, liftings, geometry, all");
        r->add_option("name", suite_name)->required();
        r->add_option("--seed", seed_flag);
        r->callback([&] {
            auto cfg = load_config(config_path, seed_flag);
            auto reports = run_suite(suite_name, cfg);
            bool json = out.json() || (config_path.size() && cfg.format == OutputFormat::Json && out.format == "text");
            Json j = Json::array();
            for (const auto& rep : reports) {
                if (json) j.push_back(rep.to_json());
                else std::cout << rep.to_text();
                if (!rep.ok()) status = 1;
            }
            if (json) std::cout << Json{{"config", to_json(cfg)}, {"reports", j}}.dump(2) << "\n";
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        // Bad or inconsistent input: schema, spec, arity, unknown suite.
        std::cerr << e.kind() << ": " << e.what() << "\n";
        return 2;
    }
    return status;
}
