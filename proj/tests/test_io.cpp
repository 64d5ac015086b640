#include <gtest/gtest.h>

#include "tatekit/errors.hpp"
#include "tatekit/io.hpp"
#include "tatekit/plot.hpp"
#include "tatekit/sampling.hpp"
#include "tatekit/suite.hpp"

using namespace tatekit;

namespace {

// serialize -> parse -> serialize must be a fixed point, and the parsed value
// must equal the original.
template <class T, class Parse>
void round_trip(const T& v, Parse parse) {
    auto j = io::to_json(v);
    auto text = j.dump();
    auto back = parse(io::parse_text(text));
    EXPECT_EQ(io::to_json(back).dump(), text);
    EXPECT_TRUE(back == v) << text;
}

std::string schema_message(const std::function<void()>& f) {
    try {
        f();
    } catch (const SchemaError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Io, FieldsRoundTrip) {
    for (auto k : {FieldSpec::rationals(), FieldSpec::prime(7), FieldSpec::extension(5, {2, 0, 1})}) {
        auto back = io::field_from_json(io::to_json(k));
        EXPECT_EQ(io::to_json(back), io::to_json(k));
        EXPECT_TRUE(*back == *k);
    }
}

TEST(Io, SeriesCertificatesAndOperatorsRoundTrip) {
    sampling::Rng rng(11);
    for (int i = 0; i < 150; ++i) {
        auto k = sampling::random_field(rng);
        int n = 1 + i % 3;
        auto s = sampling::random_series(rng, k, sampling::SeriesShape{n, 5, -2, 0.4});
        round_trip(s, [](const io::Json& j) { return io::series_from_json(j); });
        round_trip(s.cert(), [n](const io::Json& j) { return io::cert_from_json(j, n); });
        auto f = sampling::random_operator(rng, k, n);
        auto text = io::to_json(f).dump();
        auto back = io::operator_from_json(io::parse_text(text));
        EXPECT_EQ(io::to_json(back).dump(), text);
        // Same action on a probe.
        auto x = sampling::random_series(rng, k, sampling::SeriesShape{n, 4, -2, 0.4});
        try {
            EXPECT_EQ(apply(back, x), apply(f, x));
        } catch (const EmptyPrecision&) {
        }
    }
}

TEST(Io, SubspacesLiftingsProfilesRoundTrip) {
    sampling::Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        auto s = sampling::random_subspace(rng, 1 + i % 3, 3, true);
        auto j = io::to_json(*s);
        auto back = io::subspace_from_json(io::parse_text(j.dump()));
        EXPECT_EQ(*back, *s) << j.dump();
        EXPECT_EQ(io::to_json(*back), j);
        auto l = sampling::random_lattice(rng, 1 + i % 3, 3);
        EXPECT_EQ(io::lattice_from_json(io::to_json(l.subspace())).subspace(), l.subspace());
    }
    for (const char* p : {"neg-identity", "pos-identity", "zero"})
        round_trip(LiftingSpec::preset(p, 6), [](const io::Json& j) { return io::lifting_from_json(j); });
    round_trip(LiftingSpec::standard(), [](const io::Json& j) { return io::lifting_from_json(j); });
    OpenProfile v;
    v.threshold = 1;
    v.base = -2;
    v.slope = 1;
    v.exceptions[-4] = 3;
    round_trip(v, [](const io::Json& j) { return io::profile_from_json(j); });
}

TEST(Io, MalformedCertificateNamesTheAxis) {
    auto msg = schema_message([] { io::cert_from_json(io::parse_text(R"({"lo":[0,5],"hi":[3,2]})"), 2, "$.cert"); });
    EXPECT_NE(msg.find("axis 2"), std::string::npos) << msg;
    EXPECT_NE(msg.find("$.cert"), std::string::npos) << msg;
    msg = schema_message([] { io::cert_from_json(io::parse_text(R"({"lo":[4,0],"hi":[3,2]})"), 2); });
    EXPECT_NE(msg.find("axis 1"), std::string::npos) << msg;
    msg = schema_message([] {
        io::series_from_json(io::parse_text(R"({"field":{"kind":"Q"},"n":2,"terms":[],"cert":{"lo_top":9,"hi":[3,2],"rules":[{"exceptions":[],"tail_start":null,"tail":null}]}})"));
    });
    EXPECT_NE(msg.find("axis 2"), std::string::npos) << msg;
}

TEST(Io, SchemaErrorsCarryPaths) {
    EXPECT_THROW(io::parse_text("{not json"), SchemaError);
    auto msg = schema_message([] { io::field_from_json(io::parse_text(R"({"kind":"R"})")); });
    EXPECT_NE(msg.find("$.kind"), std::string::npos) << msg;
    msg = schema_message([] {
        io::series_from_json(io::parse_text(R"({"field":{"kind":"Fp","p":5},"n":1,"terms":[{"e":[0,1],"c":1}],"cert":{"lo":[0],"hi":[4]}})"));
    });
    EXPECT_NE(msg.find("$.terms[0]"), std::string::npos) << msg;
    EXPECT_THROW(io::lattice_from_json(io::parse_text(
                     R"({"n":2,"m":0,"head":"zero","slices":[],"tail":{"kind":"shifted","base":0,"slope":1}})")),
                 SchemaError);
    EXPECT_THROW(io::lifting_from_json(io::parse_text(R"({"mode":"sideways"})")), SchemaError);
}

TEST(Plot, StandardLatticeIsAHalfPlane) {
    plot::View v;
    auto g = plot::grid_of(*MonomialSubspace::standard(2, 0), v);
    for (std::int64_t y = v.lo; y < v.hi; ++y)
        for (std::int64_t x = v.lo; x < v.hi; ++x)
            EXPECT_EQ(g.at(x, y) == plot::Cell::Shaded, y >= 0) << x << "," << y;
    auto art = plot::ascii(g);
    EXPECT_NE(art.find("   0 #######"), std::string::npos) << art;
    EXPECT_NE(art.find("  -1 ......."), std::string::npos) << art;
    auto svg = plot::svg(g);
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_EQ(svg, plot::svg(plot::grid_of(*MonomialSubspace::standard(2, 0), v)));
}

TEST(Plot, SeriesCellsAndArity) {
    auto k = FieldSpec::rationals();
    TruncatedSeries s(k, 2, {{{0, 0}, FieldScalar::one(k)}}, BoundCertificate::rectangular({0, 0}, {2, 3}));
    auto g = plot::grid_of(s, plot::View{});
    EXPECT_EQ(g.at(0, 0), plot::Cell::Shaded);
    EXPECT_EQ(g.at(1, 0), plot::Cell::Blank);
    EXPECT_EQ(g.at(2, 0), plot::Cell::Hatched);
    EXPECT_EQ(g.at(0, -1), plot::Cell::Blank);
    EXPECT_THROW(plot::grid_of(*MonomialSubspace::standard(1, 0), plot::View{}), ArityUnsupported);
    auto line = plot::number_line([](std::int64_t x) { return x >= 0 ? plot::Cell::Shaded : plot::Cell::Blank; }, -2, 3);
    EXPECT_EQ(line.substr(0, 5), "..###");
}

TEST(Suite, DeterministicAndNamed) {
    RunConfig cfg;
    cfg.ring_samples = cfg.lattice_samples = cfg.agreement_samples = 30;
    cfg.transfer_samples = 60;
    cfg.cubical_samples = cfg.lifting_samples = cfg.geometry_samples = 20;
    auto a = run_suite("all", cfg), b = run_suite("all", cfg);
    ASSERT_EQ(a.size(), suite_names().size());
    for (size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].to_text(), b[i].to_text());
        EXPECT_EQ(a[i].to_json(), b[i].to_json());
        EXPECT_TRUE(a[i].ok()) << a[i].to_text();
        // A single suite reproduces its part of "all".
        EXPECT_EQ(run_suite(a[i].suite, cfg).at(0).to_text(), a[i].to_text());
    }
    EXPECT_THROW(run_suite("rings", cfg), UnknownSuite);
    auto back = run_config_from_json(to_json(cfg));
    EXPECT_EQ(to_json(back), to_json(cfg));
    EXPECT_THROW(run_config_from_json(io::parse_text(R"({"seed":"one"})")), SchemaError);
}

TEST(Io, Polynomials) {
    EXPECT_EQ(io::parse_poly("x^2-2"), (polymod::Poly{-2, 0, 1}));
    EXPECT_EQ(io::parse_poly(" 3*x^3 + x + 1 "), (polymod::Poly{1, 1, 0, 3}));
    EXPECT_EQ(io::parse_poly("-2,0,1"), (polymod::Poly{-2, 0, 1}));
    EXPECT_EQ(io::parse_poly("-x^2+2x"), (polymod::Poly{0, 2, -1}));
    EXPECT_EQ(io::poly_to_string({-2, 0, 1}), "x^2 - 2");
    EXPECT_EQ(io::parse_poly(io::poly_to_string({5, -1, 0, 2})), (polymod::Poly{5, -1, 0, 2}));
    EXPECT_THROW(io::parse_poly("x^"), SchemaError);
    EXPECT_THROW(io::parse_poly("y+1"), SchemaError);
    EXPECT_THROW(io::parse_poly(""), SchemaError);
}
