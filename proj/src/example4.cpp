#include "domtorso/example4.hpp"

#include "domtorso/projection.hpp"
#include "domtorso/torso.hpp"

#include <sstream>

namespace domtorso {

std::string_view example4_scenario_text()
{
    static const std::string text = std::string(example4_presentation_text()) +
        "\n"
        "set U = {X[0]}\n"
        "set F = {X[2], X[3]}\n"
        "ray S prefix X[2] Z#0.z period X[n] Y@n.y start 3\n"
        "\n"
        "check classify component=Y@3 expect=prime\n"
        "check classify component=Z#0 expect=double-prime\n"
        "check torso edge=X[1]--X[3] expect=present\n"
        "check project ray=S expect-prefix=(X[2],X[3],V[Y@3],X[4],V[Y@4])\n"
        "check separate in=K U=U F=F target=S expect=separated\n"
        "check separate in=G U=U F=F target=S expect=not-separated witness=(X[0],X[1],Z#0.z)\n"
        "check lemma U=U F=F ray=S separator=fs expect=holds\n"
        "check lemma U=U F=F ray=S separator=x expect=not-separated witness=(X[0],X[1],Z#0.z)\n"
        "check remark U=U F=F ray=S\n"
        "check pipeline U=U ray=S expect=separated\n";
    return text;
}

bool Example4Result::ok() const
{
    return first_failure().empty();
}

std::string Example4Result::first_failure() const
{
    for (const auto& a : assertions)
        if (!a.ok)
            return a.name;
    return {};
}

namespace {

Vertex x(Index j) { return Vertex::host("X", j); }

RaySpec example_ray()
{
    return parse_ray("ray S prefix X[2] Z#0.z period X[n] Y@n.y start 3");
}

std::string certificate_detail(const SeparationCertificate& c)
{
    if (!c.separated)
        return "not separated, witness " + to_string(c.witness);
    std::string out = "separated at";
    for (auto [d, r] : c.checked)
        out += " " + std::to_string(d) + ":" + std::to_string(r);
    return out;
}

Assertion check_classification(const Torso& t)
{
    Assertion a{"classification", false, {}};
    const auto& c = t.classification();
    auto prime = c.prime_classes();
    auto dprime = c.double_prime_classes();
    if (prime.size() != 1 || dprime.size() != 1) {
        a.detail = "expected one class on each side, got " + std::to_string(prime.size()) + " and " + std::to_string(dprime.size());
        return a;
    }
    const AdhesionClass& y = c.classes[prime.front()];
    const AdhesionClass& z = c.classes[dprime.front()];
    bool yOk = y.kind == AdhesionClass::Kind::Schema && y.pattern == "Y" && y.excluded.empty() &&
        y.countPerInstance == Cardinal::finite(1);
    bool zOk = z.kind == AdhesionClass::Kind::Ground && z.ground == VertexSet{x(1), x(2), x(3)} &&
        z.countPerInstance == Cardinal::aleph1();
    for (Index i = 0; i < 8 && yOk; ++i)
        yOk = c.side_of(ComponentId::indexed("Y", i)) == Side::Prime;
    for (Index k = 0; k < 4 && zOk; ++k)
        zOk = c.side_of(ComponentId::replicate("Z", k)) == Side::DoublePrime;
    a.ok = yOk && zOk;
    a.detail = "prime " + y.descriptor() + ", double-prime " + z.descriptor() + " x " + to_string(z.countPerInstance);
    return a;
}

} // namespace

Example4Result run_example4(const Example4Options& options)
{
    Example4Result result;
    GraphPresentation p = parse_presentation(example4_presentation_text());
    require_valid(p);
    Torso t = build_torso(p);
    RaySpec s = example_ray();
    validate_ray(p, s);
    VertexSet u{x(0)};
    VertexSet f{x(2), x(3)};

    result.assertions.push_back(check_classification(t));

    {
        bool edge = t.adjacent(x(1), x(3));
        result.assertions.push_back({"torso-edge", edge, edge ? "X[1]--X[3] in K" : "X[1]--X[3] missing from K"});
    }

    ProjectionSeq proj = k_project(t, mask_sequence(p, s));
    {
        std::vector<Vertex> want{x(2), x(3), Vertex::contracted(ComponentId::indexed("Y", 3)), x(4), Vertex::contracted(ComponentId::indexed("Y", 4))};
        std::vector<Vertex> got = proj.unroll(want.size());
        got.resize(std::min(got.size(), want.size()));
        result.assertions.push_back({"projection-prefix", got == want, "begins " + to_string(got)});
    }

    {
        SeparationCertificate c = separates_at_depths(t, f, u, TargetSpec::of_projection(proj), options.depths, options.reps);
        result.assertions.push_back({"f-separates-in-k", c.separated, certificate_detail(c)});
    }

    VertexSet xs = pitz_x(t, f);
    {
        SeparationCertificate c = separates_at_depths(p, xs, u, TargetSpec::of_ray(s), options.depths, options.reps);
        std::vector<Vertex> want{x(0), x(1), Vertex::inner("Z", CopyKind::Replicated, 0, {"z", {}})};
        bool ok = xs == f && !c.separated && c.witness == want;
        result.assertions.push_back({"x-fails", ok, "X=" + to_string(xs) + ", " + certificate_detail(c)});
    }

    {
        VertexSet fs = options.useX ? xs : s_modification(t, s, f);
        SeparationCertificate c = separates_at_depths(p, fs, u, TargetSpec::of_ray(s), options.depths, options.reps);
        bool ok = c.separated && (options.useX || fs == VertexSet{x(1), x(2), x(3)});
        std::string label = options.useX ? "X=" : "F_S=";
        result.assertions.push_back({"fs-separates", ok, label + to_string(fs) + ", " + certificate_detail(c)});
    }
    return result;
}

std::string report(const Example4Result& r)
{
    std::ostringstream out;
    for (std::size_t k = 0; k < r.assertions.size(); ++k) {
        const auto& a = r.assertions[k];
        out << "assertion." << k + 1 << "." << a.name << "=" << (a.ok ? "pass" : "FAIL") << "\n";
        out << "assertion." << k + 1 << ".detail=" << a.detail << "\n";
    }
    out << "result=" << (r.ok() ? "pass" : "fail") << "\n";
    if (!r.ok())
        out << "first_failure=" << r.first_failure() << "\n";
    return out.str();
}

} // namespace domtorso
