#include "domtorso/scenario.hpp"

#include "domtorso/adhesion.hpp"
#include "domtorso/projection.hpp"
#include "domtorso/separation.hpp"
#include "text.hpp"

#include <fstream>
#include <sstream>

namespace domtorso {

std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw FileNotFoundError(p);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

VertexSet Scenario::resolve_set(const std::string& nameOrLiteral) const
{
    if (auto it = sets.find(nameOrLiteral); it != sets.end())
        return it->second;
    std::string_view t = detail::trim(nameOrLiteral);
    if (t.empty() || t.front() != '{')
        throw Error("unknown vertex set '" + nameOrLiteral + "'");
    return parse_vertex_set(t);
}

const RaySpec& Scenario::ray(const std::string& name) const
{
    auto it = rays.find(name);
    if (it == rays.end())
        throw Error("unknown ray '" + name + "'");
    return it->second;
}

std::vector<Vertex> parse_vertex_list(std::string_view text)
{
    std::string_view t = detail::trim(text);
    if (!t.empty() && t.front() == '(') {
        if (t.back() != ')')
            throw Error("unbalanced parentheses in vertex list");
        t = t.substr(1, t.size() - 2);
    }
    std::vector<Vertex> out;
    std::size_t begin = 0;
    while (begin <= t.size()) {
        std::size_t end = t.find(',', begin);
        std::string_view item = detail::trim(t.substr(begin, end == std::string_view::npos ? std::string_view::npos : end - begin));
        if (!item.empty())
            out.push_back(parse_vertex(item));
        if (end == std::string_view::npos)
            break;
        begin = end + 1;
    }
    return out;
}

std::vector<Index> parse_index_list(std::string_view text)
{
    std::vector<Index> out;
    detail::Cursor cur(text);
    while (!cur.at_end()) {
        out.push_back(cur.number());
        cur.skip_ws();
        if (!cur.consume(','))
            break;
    }
    if (!cur.at_end())
        cur.fail("expected a comma-separated list of numbers");
    if (out.empty())
        throw Error("empty number list");
    return out;
}

namespace {

/// Splits on whitespace outside (), {} and [].
std::vector<std::string> split_args(std::string_view text)
{
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(' || c == '{' || c == '[')
            ++depth;
        if (c == ')' || c == '}' || c == ']')
            --depth;
        if (depth == 0 && std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty())
                out.push_back(std::move(cur));
            cur.clear();
            continue;
        }
        cur += c;
    }
    if (!cur.empty())
        out.push_back(std::move(cur));
    return out;
}

bool presentation_line(std::string_view first)
{
    return first == "host" || first == "component" || first == "inner" || first == "attach";
}

} // namespace

Scenario parse_scenario(std::string_view text, const std::filesystem::path& baseDir)
{
    Scenario s;
    auto lines = detail::split_lines(text);
    // Non-presentation lines are blanked so presentation errors keep their
    // line numbers.
    std::string inline_text;
    bool hasInline = false;
    std::vector<std::filesystem::path> includes;

    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        std::string_view line = detail::strip_comment(lines[ln]);
        detail::Cursor cur(line, ln + 1);
        std::string_view first = cur.token();
        if (first.empty()) {
            inline_text += '\n';
            continue;
        }
        if (presentation_line(first)) {
            inline_text += std::string(line) + '\n';
            hasInline = true;
            continue;
        }
        inline_text += '\n';
        if (first == "include") {
            std::string_view rest = cur.rest();
            if (rest.empty())
                cur.fail("include needs a file name");
            includes.push_back(baseDir / std::filesystem::path(std::string(detail::trim(rest))));
        } else if (first == "set") {
            std::string name = cur.name();
            cur.expect_symbol("=");
            if (s.sets.contains(name))
                cur.fail("duplicate set '" + name + "'");
            std::string_view rest = cur.rest();
            std::size_t column = cur.column();
            try {
                s.sets[name] = parse_vertex_set(rest);
            } catch (const ParseError& e) {
                throw ParseError(ln + 1, column + e.column() - 1, e.message());
            }
        } else if (first == "ray") {
            RaySpec r = parse_ray(line, ln + 1);
            if (s.rays.contains(r.name))
                cur.fail("duplicate ray '" + r.name + "'");
            s.rays[r.name] = std::move(r);
        } else if (first == "check") {
            CheckSpec c;
            c.line = ln + 1;
            c.kind = cur.name();
            for (const auto& arg : split_args(cur.rest())) {
                auto eq = arg.find('=');
                if (eq == std::string::npos || eq == 0)
                    throw ParseError(ln + 1, 1, "check arguments are key=value, got '" + arg + "'");
                c.args[arg.substr(0, eq)] = arg.substr(eq + 1);
            }
            s.checks.push_back(std::move(c));
        } else {
            cur.reset(0);
            cur.skip_ws();
            cur.fail("unknown directive '" + std::string(first) + "'");
        }
    }

    if (hasInline && !includes.empty())
        throw Error("a scenario either includes its presentation or states it inline, not both");
    if (!includes.empty()) {
        std::string all;
        for (const auto& inc : includes)
            all += read_file(inc) + "\n";
        try {
            s.presentation = parse_presentation(all);
        } catch (const ParseError& e) {
            throw Error("in included presentation: " + std::string(e.what()));
        }
    } else {
        s.presentation = parse_presentation(inline_text);
    }

    for (const auto& [name, set] : s.sets)
        for (const auto& v : set)
            if (!v.is_contracted() && !contains_vertex(s.presentation, v))
                throw Error("set " + name + ": address out of range: " + to_string(v));
    for (const auto& [name, r] : s.rays)
        validate_ray(s.presentation, r);
    return s;
}

Scenario load_scenario(const std::filesystem::path& file)
{
    return parse_scenario(read_file(file), file.parent_path());
}

std::string serialize(const Scenario& s)
{
    std::string out = serialize(s.presentation);
    for (const auto& [name, set] : s.sets)
        out += "set " + name + " = " + to_string(set) + "\n";
    for (const auto& [name, r] : s.rays)
        out += to_string(r) + "\n";
    for (const auto& c : s.checks) {
        out += "check " + c.kind;
        for (const auto& [k, v] : c.args)
            out += " " + k + "=" + v;
        out += "\n";
    }
    return out;
}

namespace {

std::string arg(const CheckSpec& c, const std::string& key, const std::string& fallback)
{
    auto it = c.args.find(key);
    return it == c.args.end() ? fallback : it->second;
}

std::string required(const CheckSpec& c, const std::string& key)
{
    auto it = c.args.find(key);
    if (it == c.args.end())
        throw Error("check " + c.kind + " needs " + key + "=");
    return it->second;
}

std::vector<Index> depths_of(const CheckSpec& c)
{
    auto it = c.args.find("depths");
    return it == c.args.end() ? kDefaultDepths : parse_index_list(it->second);
}

Index reps_of(const CheckSpec& c)
{
    auto it = c.args.find("reps");
    return it == c.args.end() ? kDefaultReps : parse_index_list(it->second).front();
}

std::string verdict(const SeparationCertificate& c) { return c.separated ? "separated" : "not-separated"; }

/// Compares a certificate against expect= and witness=.
void expect_certificate(CheckResult& r, const CheckSpec& c, const SeparationCertificate& cert, const std::string& defaultExpect)
{
    std::string expect = arg(c, "expect", defaultExpect);
    r.ok = verdict(cert) == expect;
    r.message = "expected " + expect + ", got " + verdict(cert);
    if (r.ok && c.args.contains("witness")) {
        std::vector<Vertex> w = parse_vertex_list(c.args.at("witness"));
        if (w != cert.witness) {
            r.ok = false;
            r.message = "expected witness " + to_string(w) + ", got " + to_string(cert.witness);
        }
    }
}

ComponentId parse_component(const std::string& text)
{
    Vertex v = parse_vertex("V[" + text + "]");
    return v.component();
}

} // namespace

CheckResult run_check(const Scenario& s, const Torso& t, const CheckSpec& c)
{
    CheckResult r;
    r.line = c.line;
    r.kind = c.kind;
    if (c.kind == "separate") {
        std::string in = arg(c, "in", "G");
        VertexSet u = s.resolve_set(required(c, "U"));
        VertexSet f = s.resolve_set(arg(c, "F", "{}"));
        std::string target = required(c, "target");
        SeparationCertificate cert;
        if (in == "G") {
            TargetSpec spec = s.rays.contains(target) ? TargetSpec::of_ray(s.ray(target)) : TargetSpec::of_set(s.resolve_set(target));
            cert = separates_at_depths(s.presentation, f, u, spec, depths_of(c), reps_of(c));
        } else if (in == "K") {
            TargetSpec spec = s.rays.contains(target) ? TargetSpec::of_projection(k_project(t, mask_sequence(s.presentation, s.ray(target)))) : TargetSpec::of_set(s.resolve_set(target));
            cert = separates_at_depths(t, f, u, spec, depths_of(c), reps_of(c));
        } else {
            throw Error("in= must be G or K");
        }
        r.report = report(cert);
        expect_certificate(r, c, cert, "separated");
    } else if (c.kind == "lemma") {
        SeparatorChoice choice = arg(c, "separator", "fs") == "x" ? SeparatorChoice::PitzX : SeparatorChoice::SModification;
        LemmaReport lr = lemma_check(t, s.resolve_set(arg(c, "U", "U")), s.ray(arg(c, "ray", "S")), s.resolve_set(arg(c, "F", "F")), depths_of(c), reps_of(c), choice);
        r.report = report(lr);
        std::string expect = arg(c, "expect", "holds");
        if (expect == "separated" || expect == "not-separated") {
            expect_certificate(r, c, lr.conclusion, expect);
        } else {
            r.ok = lr.status == expect;
            r.message = "expected status " + expect + ", got " + lr.status;
        }
        if (lr.violation()) {
            r.ok = false;
            r.message = "LEMMA-VIOLATION: " + r.message;
        }
    } else if (c.kind == "remark") {
        RemarkReport rr = remark_tail_check(t, s.resolve_set(arg(c, "U", "U")), s.ray(arg(c, "ray", "S")), s.resolve_set(arg(c, "F", "F")), depths_of(c), reps_of(c));
        r.report = report(rr);
        expect_certificate(r, c, rr.certificate, "separated");
    } else if (c.kind == "project") {
        const RaySpec& ray = s.ray(arg(c, "ray", "S"));
        ProjectionSeq proj = k_project(t, mask_sequence(s.presentation, ray));
        LocalFinitenessVerdict lf = check_local_finiteness(t, proj, 40);
        r.report = "masked=" + to_string(mask_sequence(s.presentation, ray)) + "\nprojection=" + to_string(proj) + "\nlocally_finite=" + (lf.ok ? "yes" : "no") + "\n";
        r.ok = lf.ok;
        r.message = lf.reason;
        if (c.args.contains("expect-prefix")) {
            std::vector<Vertex> want = parse_vertex_list(c.args.at("expect-prefix"));
            std::vector<Vertex> got = proj.unroll(want.size());
            got.resize(std::min(got.size(), want.size()));
            if (got != want) {
                r.ok = false;
                r.message = "expected projection to begin " + to_string(want) + ", got " + to_string(got);
            } else if (r.ok) {
                r.message = "projection begins " + to_string(want);
            }
        }
    } else if (c.kind == "classify") {
        ComponentId d = parse_component(required(c, "component"));
        Side side = t.classification().side_of(d);
        std::string got = side == Side::Prime ? "prime" : "double-prime";
        std::string expect = required(c, "expect");
        r.ok = got == expect;
        r.message = to_string(d) + " is " + got;
        r.report = "component=" + to_string(d) + "\nside=" + to_string(side) + "\n";
    } else if (c.kind == "torso") {
        std::string edge = required(c, "edge");
        auto dash = edge.find("--");
        if (dash == std::string::npos)
            throw Error("edge= must be a--b");
        Vertex a = parse_vertex(edge.substr(0, dash));
        Vertex b = parse_vertex(edge.substr(dash + 2));
        bool present = t.adjacent(a, b);
        std::string expect = arg(c, "expect", "present");
        r.ok = (present ? "present" : "absent") == expect;
        r.message = to_string(a) + "--" + to_string(b) + (present ? " is" : " is not") + " an edge of K";
        r.report = "edge=" + to_string(a) + "--" + to_string(b) + "\npresent=" + (present ? "yes" : "no") + "\n";
    } else if (c.kind == "pipeline") {
        PipelineReport pr = faithfulness_pipeline(t, s.resolve_set(arg(c, "U", "U")), s.ray(arg(c, "ray", "S")), depths_of(c), reps_of(c));
        r.report = report(pr);
        std::string expect = arg(c, "expect", "separated");
        r.ok = pr.status == expect;
        r.message = "expected " + expect + ", got " + pr.status;
    } else {
        throw Error("unknown check kind '" + c.kind + "'");
    }
    return r;
}

std::vector<CheckResult> run_checks(const Scenario& s, const std::vector<std::string>& kinds)
{
    Torso t = build_torso(s.presentation);
    std::vector<CheckResult> out;
    for (const auto& c : s.checks) {
        if (!kinds.empty() && std::find(kinds.begin(), kinds.end(), c.kind) == kinds.end())
            continue;
        try {
            out.push_back(run_check(s, t, c));
        } catch (const Error& e) {
            CheckResult r;
            r.line = c.line;
            r.kind = c.kind;
            r.ok = false;
            r.message = e.what();
            out.push_back(std::move(r));
        }
    }
    return out;
}

} // namespace domtorso
