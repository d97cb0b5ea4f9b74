#include "fibalg/cli.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fibalg/dtype.hpp"
#include "fibalg/error.hpp"
#include "fibalg/genseq.hpp"
#include "fibalg/identities.hpp"
#include "fibalg/quaternion.hpp"
#include "fibalg/seqcore.hpp"
#include "fibalg/splitcert.hpp"

namespace fibalg::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::set<std::string> kValueOptions{"--alpha", "--beta", "--budget", "--side"};
const std::set<std::string> kFlags{"--strict", "--timing"};

struct Args {
    std::vector<std::string> pos;
    std::map<std::string, std::string> options;
    std::set<std::string> flags;

    void expect(std::size_t count, std::string_view synopsis) const {
        if (pos.size() != count)
            throw UsageError("expected " + std::to_string(count) + " argument(s): " + std::string(synopsis));
    }
    bool flag(const std::string& name) const { return flags.count(name) != 0; }
    std::optional<std::string> option(const std::string& name) const {
        auto it = options.find(name);
        if (it == options.end())
            return std::nullopt;
        return it->second;
    }
};

std::int64_t parse_index(const std::string& text) {
    const Integer v = parse_integer(text);
    if (!v.fits_slong_p())
        throw InvalidInput("index out of range: " + text);
    return v.get_si();
}

Side parse_side(const Args& args) {
    const auto side = args.option("--side").value_or("left");
    if (side == "left")
        return Side::Left;
    if (side == "right")
        return Side::Right;
    throw UsageError("--side must be left or right");
}

AlgebraParams parse_params(const Args& args) {
    return AlgebraParams(parse_rational(args.option("--alpha").value_or("-1")),
                         parse_rational(args.option("--beta").value_or("-1")));
}

Quaternion parse_quaternion(const Args& args, std::size_t first) {
    Quaternion::Coeffs c;
    for (std::size_t i = 0; i < 4; ++i)
        c[i] = parse_rational(args.pos[first + i]);
    return Quaternion(parse_params(args), c);
}

json check_json(std::string_view what, const CheckResult& r) {
    return {{"identity", std::string(what)},
            {"n", r.n},
            {"holds", r.holds},
            {"lhs", to_string(r.lhs)},
            {"rhs", to_string(r.rhs)}};
}

IdentityId parse_identity_arg(const std::string& text) {
    auto id = parse_identity(text);
    if (!id)
        throw UsageError("unknown identity '" + text + "'");
    return *id;
}

json point_json(const RationalPoint& p) {
    return json::array({to_string(p.x), to_string(p.y), to_string(p.z)});
}

// Runs `body` with the group named on the command line.
template <typename Body>
int with_group(const std::string& name, Body&& body) {
    if (name == "integers-additive")
        return body(IntegersAdditive{}, [](const std::string& s) { return parse_integer(s); });
    if (name == "rationals-multiplicative")
        return body(RationalsMultiplicative{}, [](const std::string& s) { return parse_rational(s); });
    const std::string prefix = "units-mod:";
    if (name.rfind(prefix, 0) == 0) {
        const UnitsMod group(parse_integer(name.substr(prefix.size())));
        return body(group, [&group](const std::string& s) { return group.reduce(parse_integer(s)); });
    }
    throw UsageError("unknown group '" + name +
                     "' (integers-additive | rationals-multiplicative | units-mod:m)");
}

DTypeSpec parse_dspec(const Args& args, std::size_t first) {
    return {parse_integer(args.pos[first]), parse_integer(args.pos[first + 1]),
            parse_integer(args.pos[first + 2]), parse_integer(args.pos[first + 3])};
}

using Handler = std::function<int(const Args&, std::ostream&)>;

struct Command {
    CommandInfo info;
    Handler handler;
};

void emit(std::ostream& out, const json& j) {
    out << j.dump() << '\n';
}

int dtype_command(const Args& args, std::ostream& out, bool closed) {
    args.expect(8, "GROUP A B D0 D1 G0 G1 N");
    const DTypeSpec spec = parse_dspec(args, 1);
    const std::int64_t n = parse_index(args.pos[7]);
    const Side side = parse_side(args);
    return with_group(args.pos[0], [&](const auto& group, auto parse) {
        const auto g0 = parse(args.pos[5]);
        const auto g1 = parse(args.pos[6]);
        json values = json::array();
        for (std::int64_t k = 0; k <= n; ++k) {
            const auto v = closed ? dtype_closed_form(group, g0, g1, spec, k)
                                  : dtype_seq(group, g0, g1, spec, side, k);
            values.push_back(group.format(v));
        }
        json j = {{"group", group.name()}, {"n", n}, {"values", std::move(values)}};
        if (!closed)
            j["side"] = side == Side::Left ? "left" : "right";
        emit(out, j);
        return kOk;
    });
}

const std::vector<Command>& commands() {
    static const std::vector<Command> table = {
        {{"seq fib", "N", {"fib"}},
         [](const Args& a, std::ostream& out) {
             a.expect(1, "N");
             const auto n = parse_index(a.pos[0]);
             emit(out, {{"n", n}, {"value", to_string(fib(n))}});
             return kOk;
         }},
        {{"seq lucas", "N", {"lucas"}},
         [](const Args& a, std::ostream& out) {
             a.expect(1, "N");
             const auto n = parse_index(a.pos[0]);
             emit(out, {{"n", n}, {"value", to_string(lucas(n))}});
             return kOk;
         }},
        {{"seq pair", "N", {"fib_pair"}},
         [](const Args& a, std::ostream& out) {
             a.expect(1, "N");
             const auto n = parse_index(a.pos[0]);
             auto [f0, f1] = fib_pair(n);
             emit(out, {{"n", n}, {"value", {to_string(f0), to_string(f1)}}});
             return kOk;
         }},
        {{"seq gen", "P Q N", {"gen_fib_lucas"}},
         [](const Args& a, std::ostream& out) {
             a.expect(3, "P Q N");
             const Integer p = parse_integer(a.pos[0]);
             const Integer q = parse_integer(a.pos[1]);
             const auto n = parse_index(a.pos[2]);
             emit(out, {{"p", to_string(p)}, {"q", to_string(q)}, {"n", n},
                        {"value", to_string(gen_fib_lucas(p, q, n))}});
             return kOk;
         }},
        {{"identity list", "", {"identity_statement"}},
         [](const Args& a, std::ostream& out) {
             a.expect(0, "");
             json list = json::array();
             for (auto id : all_identities())
                 list.push_back({{"identity", std::string(identity_name(id))},
                                 {"statement", std::string(identity_statement(id))},
                                 {"domain_min", identity_domain_min(id)}});
             emit(out, list);
             return kOk;
         }},
        {{"identity check", "ID N", {"check_identity"}},
         [](const Args& a, std::ostream& out) {
             a.expect(2, "ID N");
             const IdentityId id = parse_identity_arg(a.pos[0]);
             const CheckResult r = check_identity(id, parse_index(a.pos[1]));
             emit(out, check_json(identity_name(id), r));
             return r.holds ? kOk : kCheckFailed;
         }},
        {{"identity range", "ID LO HI [--timing]", {"verify_range"}},
         [](const Args& a, std::ostream& out) {
             a.expect(3, "ID LO HI");
             const Report report =
                 verify_range(parse_identity_arg(a.pos[0]), parse_index(a.pos[1]), parse_index(a.pos[2]));
             emit(out, to_json(report, a.flag("--timing")));
             return report.passed() ? kOk : kCheckFailed;
         }},
        {{"ring member", "X", {"in_ring_A", "in_ideal_M"}},
         [](const Args& a, std::ostream& out) {
             a.expect(1, "X");
             const Integer x = parse_integer(a.pos[0]);
             emit(out, {{"x", to_string(x)}, {"in_A", in_ring_A(x)}, {"in_M", in_ideal_M(x)}});
             return kOk;
         }},
        {{"ring f5", "N", {"f5_factor"}},
         [](const Args& a, std::ostream& out) {
             a.expect(1, "N");
             const auto n = parse_index(a.pos[0]);
             emit(out, {{"n", n}, {"f_5n", to_string(fib(5 * n))}, {"factor", to_string(f5_factor(n))}});
             return kOk;
         }},
        {{"ring m-element", "P Q N [P Q N ...]", {"m_element"}},
         [](const Args& a, std::ostream& out) {
             if (a.pos.empty() || a.pos.size() % 3 != 0)
                 throw UsageError("expected one or more P Q N triples");
             std::vector<MTerm> terms;
             for (std::size_t i = 0; i < a.pos.size(); i += 3)
                 terms.push_back({parse_integer(a.pos[i]), parse_integer(a.pos[i + 1]), parse_index(a.pos[i + 2])});
             const Integer v = m_element(terms);
             emit(out, {{"value", to_string(v)}, {"in_M", in_ideal_M(v)}});
             return kOk;
         }},
        {{"quat mul", "X1 X2 X3 X4 Y1 Y2 Y3 Y4 [--alpha A] [--beta B]", {"quat_mul"}},
         [](const Args& a, std::ostream& out) {
             a.expect(8, "X1..X4 Y1..Y4");
             emit(out, to_json(quat_mul(parse_quaternion(a, 0), parse_quaternion(a, 4))));
             return kOk;
         }},
        {{"quat add", "X1 X2 X3 X4 Y1 Y2 Y3 Y4 [--alpha A] [--beta B]", {"quat_add"}},
         [](const Args& a, std::ostream& out) {
             a.expect(8, "X1..X4 Y1..Y4");
             emit(out, to_json(quat_add(parse_quaternion(a, 0), parse_quaternion(a, 4))));
             return kOk;
         }},
        {{"quat sub", "X1 X2 X3 X4 Y1 Y2 Y3 Y4 [--alpha A] [--beta B]", {"quat_sub"}},
         [](const Args& a, std::ostream& out) {
             a.expect(8, "X1..X4 Y1..Y4");
             emit(out, to_json(quat_sub(parse_quaternion(a, 0), parse_quaternion(a, 4))));
             return kOk;
         }},
        {{"quat conj", "X1 X2 X3 X4 [--alpha A] [--beta B]", {"quat_conj"}},
         [](const Args& a, std::ostream& out) {
             a.expect(4, "X1..X4");
             emit(out, to_json(quat_conj(parse_quaternion(a, 0))));
             return kOk;
         }},
        {{"quat trace", "X1 X2 X3 X4 [--alpha A] [--beta B]", {"quat_trace"}},
         [](const Args& a, std::ostream& out) {
             a.expect(4, "X1..X4");
             const Quaternion x = parse_quaternion(a, 0);
             emit(out, {{"quaternion", to_json(x)}, {"trace", to_string(quat_trace(x))}});
             return kOk;
         }},
        {{"quat norm", "X1 X2 X3 X4 [--alpha A] [--beta B]", {"quat_norm"}},
         [](const Args& a, std::ostream& out) {
             a.expect(4, "X1..X4");
             const Quaternion x = parse_quaternion(a, 0);
             emit(out, {{"quaternion", to_json(x)}, {"norm", to_string(quat_norm(x))}});
             return kOk;
         }},
        {{"quat fibq", "N [--alpha A] [--beta B]", {"fib_quaternion"}},
         [](const Args& a, std::ostream& out) {
             a.expect(1, "N");
             const Quaternion q = fib_quaternion(parse_index(a.pos[0]), parse_params(a));
             emit(out, {{"quaternion", to_json(q)}, {"norm", to_string(quat_norm(q))}});
             return kOk;
         }},
        {{"quat lucasq", "N [--alpha A] [--beta B]", {"lucas_quaternion"}},
         [](const Args& a, std::ostream& out) {
             a.expect(1, "N");
             const Quaternion q = lucas_quaternion(parse_index(a.pos[0]), parse_params(a));
             emit(out, {{"quaternion", to_json(q)}, {"norm", to_string(quat_norm(q))}});
             return kOk;
         }},
        {{"quat relation", "P35_1|P35_3 N", {"norm_relation_check"}},
         [](const Args& a, std::ostream& out) {
             a.expect(2, "P35_1|P35_3 N");
             NormRelation which;
             if (a.pos[0] == "P35_1")
                 which = NormRelation::P35_1;
             else if (a.pos[0] == "P35_3")
                 which = NormRelation::P35_3;
             else
                 throw UsageError("relation must be P35_1 or P35_3");
             const CheckResult r = norm_relation_check(parse_index(a.pos[1]), which);
             emit(out, check_json(a.pos[0], r));
             return r.holds ? kOk : kCheckFailed;
         }},
        {{"cert family", "K N [--strict]", {"certificate_family", "verify_point"}},
         [](const Args& a, std::ostream& out) {
             a.expect(2, "K N");
             const auto family = parse_family(a.pos[0]);
             if (!family)
                 throw UsageError("family must be one of 1..9, 8a, 8b");
             const Certificate cert = certificate_family(*family, parse_index(a.pos[1]));
             const bool strict = a.flag("--strict");
             const bool ok = verify_point(cert.conic, cert.point, strict);
             emit(out, to_json(cert, ok, strict));
             return ok ? kOk : kCheckFailed;
         }},
        {{"cert verify", "A B X Y Z [--strict]", {"verify_point"}},
         [](const Args& a, std::ostream& out) {
             a.expect(5, "A B X Y Z");
             const ConicSpec spec(parse_rational(a.pos[0]), parse_rational(a.pos[1]));
             const RationalPoint pt{parse_rational(a.pos[2]), parse_rational(a.pos[3]), parse_rational(a.pos[4])};
             const bool strict = a.flag("--strict");
             const bool ok = verify_point(spec, pt, strict);
             emit(out, {{"a", to_string(spec.a())}, {"b", to_string(spec.b())}, {"point", point_json(pt)},
                        {"verified", ok}, {"strict", strict}});
             return ok ? kOk : kCheckFailed;
         }},
        {{"cert search", "A B HEIGHT", {"search_point"}},
         [](const Args& a, std::ostream& out) {
             a.expect(3, "A B HEIGHT");
             const ConicSpec spec(parse_rational(a.pos[0]), parse_rational(a.pos[1]));
             const auto pt = search_point(spec, parse_index(a.pos[2]));
             json j = {{"a", to_string(spec.a())}, {"b", to_string(spec.b())}, {"found", pt.has_value()}};
             j["point"] = pt ? point_json(*pt) : json(nullptr);
             emit(out, j);
             return kOk;
         }},
        {{"cert decide", "A B [--budget N]", {"decide_split_hilbert"}},
         [](const Args& a, std::ostream& out) {
             a.expect(2, "A B");
             const ConicSpec spec(parse_rational(a.pos[0]), parse_rational(a.pos[1]));
             FactorBudget budget;
             if (auto b = a.option("--budget")) {
                 const Integer units = parse_integer(*b);
                 if (units < 0 || !units.fits_ulong_p())
                     throw UsageError("--budget must be a non-negative integer");
                 budget.work = units.get_ui();
             }
             json j = {{"a", to_string(spec.a())}, {"b", to_string(spec.b())}};
             try {
                 j["verdict"] = std::string(verdict_name(decide_split_hilbert(spec, budget)));
             } catch (const Undecided& e) {
                 j["verdict"] = "undecided";
                 j["reason"] = e.what();
                 emit(out, j);
                 return kUndecided;
             }
             emit(out, j);
             return kOk;
         }},
        {{"genseq iterate", "A B PHI0 PHI1 N [--side left|right]", {"relation_seq"}},
         [](const Args& a, std::ostream& out) {
             a.expect(5, "A B PHI0 PHI1 N");
             const LinearRelation rel{parse_rational(a.pos[0]), parse_rational(a.pos[1])};
             const auto n = parse_index(a.pos[4]);
             const Side side = parse_side(a);
             const Rational v = relation_seq(rel, parse_rational(a.pos[2]), parse_rational(a.pos[3]), side, n);
             emit(out, {{"n", n}, {"side", side == Side::Left ? "left" : "right"}, {"value", to_string(v)}});
             return kOk;
         }},
        {{"genseq binet", "A B PHI0 PHI1 N", {"binet_general"}},
         [](const Args& a, std::ostream& out) {
             a.expect(5, "A B PHI0 PHI1 N");
             const LinearRelation rel{parse_rational(a.pos[0]), parse_rational(a.pos[1])};
             const auto n = parse_index(a.pos[4]);
             const QuadExt v = binet_general(rel, parse_rational(a.pos[2]), parse_rational(a.pos[3]), n);
             emit(out, {{"n", n}, {"u", to_string(v.u())}, {"v", to_string(v.v())},
                        {"radicand", to_string(v.radicand())}});
             return kOk;
         }},
        {{"genseq limit", "A B PHI0 PHI1", {"ratio_limit"}},
         [](const Args& a, std::ostream& out) {
             a.expect(4, "A B PHI0 PHI1");
             const LinearRelation rel{parse_rational(a.pos[0]), parse_rational(a.pos[1])};
             const RatioLimit r = ratio_limit(rel, parse_rational(a.pos[2]), parse_rational(a.pos[3]));
             emit(out, {{"limit", r.limit}, {"empirical", r.empirical}, {"error", r.empirical_error}});
             return kOk;
         }},
        {{"dtype d", "A B D0 D1 N", {"d_seq"}},
         [](const Args& a, std::ostream& out) {
             a.expect(5, "A B D0 D1 N");
             const auto n = parse_index(a.pos[4]);
             emit(out, {{"n", n}, {"value", to_string(d_seq(parse_dspec(a, 0), n))}});
             return kOk;
         }},
        {{"dtype iterate", "GROUP A B D0 D1 G0 G1 N [--side left|right]", {"dtype_seq"}},
         [](const Args& a, std::ostream& out) { return dtype_command(a, out, false); }},
        {{"dtype closed", "GROUP A B D0 D1 G0 G1 N", {"dtype_closed_form"}},
         [](const Args& a, std::ostream& out) { return dtype_command(a, out, true); }},
    };
    return table;
}

Args split_args(const std::vector<std::string>& raw, std::size_t from) {
    Args args;
    for (std::size_t i = from; i < raw.size(); ++i) {
        const std::string& tok = raw[i];
        if (kFlags.count(tok) != 0) {
            args.flags.insert(tok);
        } else if (kValueOptions.count(tok) != 0) {
            if (i + 1 >= raw.size())
                throw UsageError(tok + " needs a value");
            args.options[tok] = raw[++i];
        } else if (tok.rfind("--", 0) == 0) {
            throw UsageError("unknown option " + tok);
        } else {
            args.pos.push_back(tok);
        }
    }
    return args;
}

} // namespace

const std::vector<CommandInfo>& command_table() {
    static const std::vector<CommandInfo> infos = [] {
        std::vector<CommandInfo> out;
        for (const auto& c : commands())
            out.push_back(c.info);
        return out;
    }();
    return infos;
}

void print_usage(std::ostream& err) {
    err << "usage: fibalg <command> [arguments]\n\ncommands:\n";
    for (const auto& c : commands())
        err << "  " << c.info.path << (c.info.arguments.empty() ? "" : " ") << c.info.arguments << '\n';
    err << "\nexit codes: 0 ok, 1 check failed, 2 usage error, 3 undecided\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.size() < 2) {
        print_usage(err);
        return kUsage;
    }
    const std::string path = args[0] + " " + args[1];
    for (const auto& c : commands()) {
        if (c.info.path != path)
            continue;
        try {
            return c.handler(split_args(args, 2), out);
        } catch (const UsageError& e) {
            err << "fibalg " << path << ": " << e.what() << "\nusage: fibalg " << path << ' '
                << c.info.arguments << '\n';
            return kUsage;
        } catch (const InvalidInput& e) {
            err << "fibalg " << path << ": " << e.what() << '\n';
            return kUsage;
        } catch (const Undecided& e) {
            err << "fibalg " << path << ": undecided: " << e.what() << '\n';
            return kUndecided;
        }
    }
    err << "fibalg: unknown command '" << path << "'\n";
    print_usage(err);
    return kUsage;
}

} // namespace fibalg::cli
