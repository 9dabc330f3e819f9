#include "oracle.hpp"

#include "domtorso/adhesion.hpp"
#include "domtorso/generator.hpp"
#include "domtorso/projection.hpp"

#include <doctest.h>

using namespace domtorso;

namespace {

GraphPresentation ex4() { return parse_presentation(example4_presentation_text()); }

Vertex v(const std::string& a) { return parse_vertex(a); }

RaySpec ex4_ray() { return parse_ray("ray S prefix X[2] Z#0.z period X[n] Y@n.y start 3"); }

/// Masks, collapses Prime runs and drops DoublePrime terms of a finite walk.
std::vector<Vertex> project_by_hand(const Torso& t, const std::vector<Vertex>& walk)
{
    std::vector<Vertex> out;
    std::optional<Vertex> last;
    for (const auto& w : walk) {
        if (w.is_host()) {
            out.push_back(w);
            last = w;
            continue;
        }
        ComponentId d = w.component();
        if (t.classification().side_of(d) == Side::DoublePrime)
            continue;
        Vertex c = Vertex::contracted(d);
        if (last != c)
            out.push_back(c);
        last = c;
    }
    return out;
}

bool starts_with(const std::vector<Vertex>& whole, const std::vector<Vertex>& part)
{
    return part.size() <= whole.size() && std::equal(part.begin(), part.end(), whole.begin());
}

const char* kTwoStep =
    "host family X index nat\n"
    "host edge X[i] -- X[i+1]\n"
    "component Y indexed\n"
    "  inner a\n"
    "  inner b\n"
    "  inner edge a -- b\n"
    "  attach a -- X[i]\n"
    "  attach b -- X[i+1]\n";

const char* kRayInside =
    "host family X index nat\n"
    "host edge X[i] -- X[i+1]\n"
    "component P indexed\n"
    "  inner ray t\n"
    "  attach t[0] -- X[i]\n";

} // namespace

TEST_CASE("masking")
{
    GraphPresentation p = ex4();
    MaskedSequence m = mask_sequence(p, ex4_ray());
    std::vector<std::string> got;
    for (const auto& w : m.unroll(2))
        got.push_back(masked_term_string(w));
    CHECK(got == std::vector<std::string>{"X[2]", "Comp(Z#0)", "X[3]", "Comp(Y@3)", "X[4]", "Comp(Y@4)"});

    std::vector<Vertex> inside{v("X[0]"), v("X[1]"), v("X[2]")};
    CHECK(mask_sequence(p, inside).prefix == inside);
    MaskedSequence walk = mask_sequence(p, {v("X[0]"), v("Y@0.y"), v("X[1]")});
    CHECK(walk.prefix == std::vector<Vertex>{v("X[0]"), v("V[Y@0]"), v("X[1]")});
}

TEST_CASE("projection of the example ray")
{
    Torso t = build_torso(ex4());
    ProjectionSeq s = k_project(t, mask_sequence(t.presentation(), ex4_ray()));
    std::vector<Vertex> want{v("X[2]"), v("X[3]"), v("V[Y@3]"), v("X[4]"), v("V[Y@4]")};
    CHECK(starts_with(s.unroll(1), want));
    CHECK(s.periodic());
    CHECK(s.start == 7);

    LocalFinitenessVerdict lf = check_local_finiteness(t, s, 40);
    CHECK(lf.ok);
    CHECK(lf.definitive);

    std::vector<Vertex> host{v("X[0]"), v("X[1]"), v("X[2]")};
    CHECK(k_project(t, mask_sequence(t.presentation(), host)).prefix == host);
}

TEST_CASE("prime runs collapse to one torso vertex")
{
    GraphPresentation p = parse_presentation(kTwoStep);
    Torso t = build_torso(p);
    ProjectionSeq s = k_project(t, mask_sequence(p, {v("X[0]"), v("Y@0.a"), v("Y@0.b"), v("X[1]")}));
    CHECK(s.prefix == std::vector<Vertex>{v("X[0]"), v("V[Y@0]"), v("X[1]")});
    CHECK_FALSE(s.periodic());
}

TEST_CASE("tendrils and tails")
{
    CHECK(is_tendril(ex4(), ex4_ray()));
    GraphPresentation p = parse_presentation(kRayInside);
    RaySpec hostOnly = parse_ray("ray H period X[n] start 0");
    CHECK(is_tendril(p, hostOnly));

    RaySpec dive = parse_ray("ray D prefix X[0] period P@0.t[n] start 0");
    validate_ray(p, dive);
    CHECK_FALSE(is_tendril(p, dive));
    TailComponent tail = tail_component(p, dive);
    CHECK(tail.component == ComponentId::indexed("P", 0));
    CHECK(tail.from == 1);

    RaySpec late = parse_ray("ray L prefix X[0] X[1] X[2] period P@2.t[n] start 0");
    validate_ray(p, late);
    CHECK(tail_component(p, late).from == 3);
    CHECK_THROWS_AS(tail_component(p, hostOnly), Error);
}

TEST_CASE("local finiteness verdicts")
{
    Torso t = build_torso(ex4());
    ProjectionSeq constant;
    constant.period = {VertexPattern{v("X[0]"), VertexPattern::Slot::None}};
    CHECK_FALSE(check_local_finiteness(t, constant, 40).ok);

    ProjectionSeq finite;
    finite.prefix = {v("X[0]"), v("X[1]")};
    LocalFinitenessVerdict lf = check_local_finiteness(t, finite, 40);
    CHECK(lf.ok);
}

TEST_CASE("sampled projection")
{
    Torso t = build_torso(ex4());
    CHECK_THROWS_AS(k_project_sampled(t, ex4_ray(), 0), Error);
    ProjectionSeq whole = k_project(t, mask_sequence(t.presentation(), ex4_ray()));
    for (Index len = 1; len < 30; ++len) {
        ProjectionSeq part = k_project_sampled(t, ex4_ray(), len);
        CHECK(part.sampled);
        CHECK(starts_with(whole.unroll(len), part.prefix));
    }
}

TEST_CASE("random tendrils: projection agrees with the hand rules and walks in K")
{
    std::size_t checked = 0;
    for (std::uint64_t trial = 0; trial < 120 && checked < 50; ++trial) {
        CAPTURE(trial);
        Rng rng = trial_rng(0x9a0e, trial);
        auto inst = random_instance(rng);
        if (!inst)
            continue;
        ++checked;
        CAPTURE(serialize(inst->presentation));
        CAPTURE(to_string(inst->ray));
        Torso t = build_torso(inst->presentation);
        ProjectionSeq s = k_project(t, mask_sequence(inst->presentation, inst->ray));
        REQUIRE(s.periodic());

        std::vector<Vertex> walk = inst->ray.unroll(40);
        std::vector<Vertex> byHand = project_by_hand(t, walk);
        byHand.pop_back();
        CHECK(starts_with(s.unroll(40), byHand));

        std::vector<Vertex> terms = s.unroll(12);
        for (std::size_t k = 0; k < terms.size(); ++k) {
            if (terms[k].is_contracted())
                CHECK(t.classification().side_of(terms[k].component()) == Side::Prime);
            if (k)
                CHECK(t.adjacent(terms[k - 1], terms[k]));
        }
        LocalFinitenessVerdict lf = check_local_finiteness(t, s, 40);
        CHECK(lf.ok);
        CHECK(lf.definitive);

        for (Index len : {5, 13, 21}) {
            ProjectionSeq part = k_project_sampled(t, inst->ray, len);
            std::vector<Vertex> hand = project_by_hand(t, inst->ray.sample(len));
            CHECK(part.prefix == hand);
        }
    }
    CHECK(checked == 50);
}
