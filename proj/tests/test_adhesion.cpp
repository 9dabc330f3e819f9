#include "oracle.hpp"

#include "domtorso/adhesion.hpp"
#include "domtorso/generator.hpp"

#include <doctest.h>

#include <map>

using namespace domtorso;

namespace {

GraphPresentation ex4() { return parse_presentation(example4_presentation_text()); }

oracle::NameSet host_names(const GraphPresentation& p, Index depth)
{
    oracle::NameSet out;
    FiniteTruncation t = truncate(p, depth, 0);
    for (const auto& v : t.graph.vertices())
        if (v.is_host())
            out.insert(to_string(v));
    return out;
}

/// "P@3.v" -> "P@3".
std::string component_of(const std::string& inner)
{
    return inner.substr(0, inner.find('.'));
}

} // namespace

TEST_CASE("component families of example4")
{
    auto fams = enumerate_component_classes(ex4());
    REQUIRE(fams.size() == 2);
    CHECK(fams[0].pattern == "Y");
    CHECK(fams[0].kind == CopyKind::Indexed);
    CHECK(fams[0].indices.infinite);
    CHECK(fams[0].count == Cardinal::aleph0());
    CHECK(fams[1].pattern == "Z");
    CHECK(fams[1].kind == CopyKind::Replicated);
    CHECK(fams[1].count == Cardinal::aleph1());

    CHECK(enumerate_component_classes(parse_presentation("host family X size 3\nhost edge X[i] -- X[i+1]\n")).empty());
    auto two = enumerate_component_classes(parse_presentation("host family X size 1\ncomponent R replicated 2\n  inner v\n  attach v -- X[0]\n"));
    REQUIRE(two.size() == 1);
    CHECK(two[0].count == Cardinal::finite(2));
}

TEST_CASE("adhesion sets")
{
    GraphPresentation p = ex4();
    CHECK(oracle::names(adhesion_set_of(p, ComponentId::indexed("Y", 3))) == oracle::NameSet{"X[3]", "X[4]"});
    CHECK(oracle::names(adhesion_set_of(p, ComponentId::replicate("Z", 0))) == oracle::NameSet{"X[1]", "X[2]", "X[3]"});
    CHECK(oracle::names(adhesion_set_of(p, ComponentId::all_replicates("Z"))) == oracle::NameSet{"X[1]", "X[2]", "X[3]"});
    GraphPresentation one = parse_presentation("host family X index nat\nhost edge X[i] -- X[i+1]\ncomponent P indexed\n  inner v\n  attach v -- X[i+2]\n");
    CHECK(adhesion_set_of(one, ComponentId::indexed("P", 4)).size() == 1);
    CHECK_THROWS_AS(adhesion_set_of(parse_presentation("host family X size 2\nhost edge X[i] -- X[i+1]\ncomponent P indexed\n  inner v\n  attach v -- X[i+1]\n"), ComponentId::indexed("P", 1)), Error);
}

TEST_CASE("example4 classification")
{
    AdhesionClassification c = classify_adhesion(ex4());
    REQUIRE(c.classes.size() == 2);
    CHECK(c.exceptionBound == 7);
    auto prime = c.prime_classes();
    auto dprime = c.double_prime_classes();
    REQUIRE(prime.size() == 1);
    REQUIRE(dprime.size() == 1);
    const AdhesionClass& y = c.classes[prime[0]];
    CHECK(y.kind == AdhesionClass::Kind::Schema);
    CHECK(y.descriptor() == "Y:{X[i],X[i+1]}");
    CHECK(y.countPerInstance == Cardinal::finite(1));
    const AdhesionClass& z = c.classes[dprime[0]];
    CHECK(z.kind == AdhesionClass::Kind::Ground);
    CHECK(oracle::names(z.ground) == oracle::NameSet{"X[1]", "X[2]", "X[3]"});
    CHECK(z.countPerInstance == Cardinal::aleph1());
    for (Index i = 0; i < 30; ++i)
        CHECK(c.side_of(ComponentId::indexed("Y", i)) == Side::Prime);
    CHECK(c.side_of(ComponentId::replicate("Z", 17)) == Side::DoublePrime);
}

TEST_CASE("replicated patterns sharing an adhesion set pool their counts")
{
    GraphPresentation p = parse_presentation(
        "host family X index nat\nhost edge X[i] -- X[i+1]\n"
        "component A replicated 2\n  inner v\n  attach v -- X[0]\n"
        "component B replicated 3\n  inner w\n  attach w -- X[0]\n");
    AdhesionClassification c = classify_adhesion(p);
    std::size_t k = c.class_of(ComponentId::replicate("A", 0));
    CHECK(k == c.class_of(ComponentId::replicate("B", 2)));
    CHECK(c.classes[k].countPerInstance == Cardinal::finite(5));
    CHECK(c.classes[k].side() == Side::Prime);

    oracle::Graph g = oracle::expand(p, 4, 3);
    auto comps = oracle::components(g, host_names(p, 4));
    CHECK(comps.size() == 5);
    for (const auto& comp : comps)
        CHECK(comp.adhesion == oracle::NameSet{"X[0]"});

    GraphPresentation inf = parse_presentation("host family X index nat\nhost edge X[i] -- X[i+1]\ncomponent R replicated aleph0\n  inner v\n  attach v -- X[0]\n");
    CHECK(classify_adhesion(inf).side_of(ComponentId::replicate("R", 0)) == Side::DoublePrime);
}

TEST_CASE("brute-force components on the example4 truncation")
{
    GraphPresentation p = ex4();
    FiniteTruncation t = truncate(p, 5, 2);
    VertexSet host;
    for (const auto& v : t.graph.vertices())
        if (v.is_host())
            host.insert(v);
    auto comps = brute_force_components(t.graph, host);
    std::vector<oracle::Component> got;
    for (const auto& c : comps)
        got.push_back({oracle::names(c.vertices), oracle::names(c.adhesion)});
    std::sort(got.begin(), got.end());
    auto want = oracle::components(oracle::example4(5, 2), oracle::names(host));
    CHECK(got == want);
    CHECK(got.size() == 7);

    VertexSet all(t.graph.vertices().begin(), t.graph.vertices().end());
    CHECK(brute_force_components(t.graph, all).empty());
    auto whole = brute_force_components(t.graph, {});
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].adhesion.empty());
    CHECK(whole[0].vertices.size() == 13);
}

TEST_CASE("classification agrees with brute force on finite presentations")
{
    std::size_t checked = 0;
    for (std::uint64_t trial = 0; checked < 40 && trial < 400; ++trial) {
        Rng rng = trial_rng(0xad4e, trial);
        GraphPresentation p = random_finite_presentation(rng);
        if (!validate_presentation(p, 10).ok)
            continue;
        ++checked;
        CAPTURE(serialize(p));
        AdhesionClassification c = classify_adhesion(p);
        CHECK(report(c) == report(classify_adhesion(parse_presentation(serialize(p)))));

        oracle::Graph g = oracle::expand(p, 10, 4);
        auto comps = oracle::components(g, host_names(p, 10));
        std::map<oracle::NameSet, std::size_t> shared;
        for (const auto& comp : comps)
            ++shared[comp.adhesion];
        std::size_t total = 0;
        for (const auto& fam : enumerate_component_classes(p))
            total += fam.count.value();
        CHECK(total == comps.size());
        for (const auto& comp : comps) {
            std::string id = component_of(*comp.vertices.begin());
            ComponentId d = parse_vertex("V[" + id + "]").component();
            CHECK(oracle::names(adhesion_set_of(p, d)) == comp.adhesion);
            const AdhesionClass& cls = c.classes[c.class_of(d)];
            CHECK(cls.countPerInstance == Cardinal::finite(shared[comp.adhesion]));
            CHECK(cls.side() == Side::Prime);
        }
    }
    CHECK(checked == 40);
}
