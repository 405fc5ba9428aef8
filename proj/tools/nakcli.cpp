// nakcli: command-line front end for triangulations, Brauer trees, two-term
// complexes and configurations.
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nak/errors.hpp"
#include "nak/fmap.hpp"
#include "nak/json_io.hpp"
#include "nak/parallel.hpp"

using namespace nak;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Options {
    std::string in;
    std::string dot;
    bool json = false;
    bool count = false;
    int e = 0, n = 0, ell = 0, m = 1, label = 0;
    std::string sign = "minus";
    std::string arc;
    std::vector<std::string> at;
    std::string kind = "2tilt";
    std::string suite = "all";
    bool annotate = false;
};

std::string read_input(const std::string& path)
{
    if (path.empty()) throw InvalidInput("--in is required");
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot read " + path);
    return std::string(std::istreambuf_iterator<char>(f), {});
}

Json input_json(const Options& o) { return parse_json(read_input(o.in)); }

void write_dot(const Options& o, const std::string& text)
{
    if (o.dot.empty()) return;
    std::ofstream f(o.dot);
    if (!f) throw InvalidInput("cannot write " + o.dot);
    f << text;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Sign parse_sign(const std::string& s)
{
    if (s == "minus" || s == "-") return Sign::Minus;
    if (s == "plus" || s == "+") return Sign::Plus;
    throw InvalidInput("sign must be minus or plus");
}

Algebra algebra(const Options& o)
{
    if (o.n < 1 || o.ell < 1) throw InvalidInput("--n and --ell must be positive");
    return Algebra(o.n, o.ell);
}

std::string line(const Triangulation& X)
{
    std::string s;
    for (const auto& a : X.arcs) s += (s.empty() ? "" : " ") + a.to_string(X.e);
    return s;
}

std::string line(const Configuration& C)
{
    std::string s;
    for (const auto& p : C.points) s += (s.empty() ? "" : " ") + p.to_string();
    return s;
}

std::string line(const TwoTerm& T)
{
    std::string s;
    for (const auto& x : T.canonical()) s += (s.empty() ? "" : " ") + x.to_string();
    return s;
}

// An arc given as a 1-based position in X, or as <*,j> / <j,i>.
Arc parse_arc(const std::string& text, const Triangulation& X)
{
    static const std::regex proj(R"(\s*<\s*\*\s*,\s*(\d+)\s*>\s*)");
    static const std::regex inner(R"(\s*<\s*(\d+)\s*,\s*(\d+)\s*>\s*)");
    static const std::regex index(R"(\s*(\d+)\s*)");
    std::smatch m;
    if (std::regex_match(text, m, index)) {
        auto k = std::stoul(m[1]);
        if (k < 1 || k > X.arcs.size()) throw InvalidInput("arc index out of range");
        return X.arcs[k - 1];
    }
    if (std::regex_match(text, m, proj)) return Arc::projective(std::stoi(m[1]));
    if (std::regex_match(text, m, inner)) {
        int j = std::stoi(m[1]), i = std::stoi(m[2]);
        int l = ((j - i) % X.e + X.e) % X.e;
        if (l < 2) l += X.e;
        Arc a = Arc::inner(i, l);
        validate_arc(a, X.e);
        return a;
    }
    throw InvalidInput("cannot parse arc " + text);
}

Ind parse_point(const std::string& text)
{
    static const std::regex pt(R"(\s*\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, pt)) throw InvalidInput("cannot parse point " + text);
    return {std::stoi(m[1]), std::stoi(m[2])};
}

int cmd_enumerate_triangulations(const Options& o)
{
    if (o.e < 1) throw InvalidInput("--e must be positive");
    auto all = enumerate_triangulations(o.e);
    if (o.count) {
        std::cout << all.size() << "\n";
        return kOk;
    }
    if (o.json) {
        Json j = Json::array();
        for (const auto& X : all) j.push_back(to_json(X));
        emit(j);
    } else {
        for (const auto& X : all) std::cout << line(X) << "\n";
    }
    return kOk;
}

int cmd_flip(const Options& o)
{
    auto X = triangulation_from_json(input_json(o));
    Arc a = parse_arc(o.arc, X);
    auto [Y, b] = flip(X, a);
    if (o.json) {
        Json j = to_json(Y);
        j["flip"] = Json{{"removed", to_json(a, X.e)}, {"added", to_json(b, X.e)}};
        emit(j);
    } else {
        std::cout << "removed " << a.to_string(X.e) << " added " << b.to_string(X.e) << "\n" << line(Y) << "\n";
    }
    return kOk;
}

int cmd_unfold(const Options& o)
{
    auto X = triangulation_from_json(input_json(o));
    if (o.n < 1 || o.n % X.e != 0) throw InvalidInput("--n must be a positive multiple of the rank");
    auto Y = unfold(X, o.n);
    if (o.json)
        emit(to_json(Y));
    else
        std::cout << line(Y) << "\n";
    return kOk;
}

int cmd_fold(const Options& o)
{
    auto Y = triangulation_from_json(input_json(o));
    if (o.e < 1 || Y.e % o.e != 0) throw InvalidInput("--e must divide the rank");
    auto X = fold(Y, o.e);
    if (o.json)
        emit(to_json(X));
    else
        std::cout << line(X) << "\n";
    return kOk;
}

int cmd_psi(const Options& o)
{
    auto X = triangulation_from_json(input_json(o));
    if (o.m < 1) throw InvalidInput("--m must be positive");
    auto G = psi(X, parse_sign(o.sign), o.m);
    write_dot(o, to_dot(G));
    if (o.json) {
        emit(to_json(G));
    } else {
        std::cout << "m " << G.m << " exceptional " << G.exceptional << "\n";
        for (const auto& x : G.edges) std::cout << "edge " << x.label << ": " << x.u << " - " << x.v << "\n";
        for (const auto& [v, c] : G.cyclic) {
            std::cout << "cyclic " << v << ":";
            for (int l : c) std::cout << " " << l;
            std::cout << "\n";
        }
        std::cout << "code " << brauer_code(G) << "\n";
    }
    return kOk;
}

int cmd_phi(const Options& o)
{
    auto X = triangulation_from_json(input_json(o));
    auto T = phi(X, parse_sign(o.sign), algebra(o));
    bool tilting = is_tilting(T);
    if (o.json)
        emit(to_json(T));
    else
        std::cout << line(T) << "\ntilting " << (tilting ? "yes" : "no") << "\n";
    return tilting ? kOk : kVerifyFailed;
}

int cmd_kauer(const Options& o)
{
    auto G = brauer_from_json(input_json(o));
    auto H = kauer_mutate(G, o.label, parse_sign(o.sign));
    write_dot(o, to_dot(H));
    if (o.json) {
        emit(to_json(H));
    } else {
        for (const auto& x : H.edges) std::cout << "edge " << x.label << ": " << x.u << " - " << x.v << "\n";
        std::cout << "code " << brauer_code(H) << "\n";
    }
    return kOk;
}

int cmd_enumerate_sms(const Options& o)
{
    auto all = enumerate_configurations(algebra(o));
    if (o.count) {
        std::cout << all.size() << "\n";
        return kOk;
    }
    if (o.json) {
        Json j = Json::array();
        for (const auto& C : all) j.push_back(to_json(C));
        emit(j);
    } else {
        for (const auto& C : all) std::cout << line(C) << "\n";
    }
    return kOk;
}

int cmd_is_config(const Options& o)
{
    Json j = input_json(o);
    Configuration C = configuration_from_json(j);
    bool ok = is_configuration(C);
    write_dot(o, to_dot(C));
    if (o.json)
        emit(Json{{"configuration", ok}});
    else
        std::cout << (ok ? "true" : "false") << "\n";
    return ok ? kOk : kVerifyFailed;
}

int cmd_sms_mutate(const Options& o)
{
    auto C = configuration_from_json(input_json(o));
    if (!is_configuration(C)) throw InvalidInput("input is not a configuration");
    std::vector<Ind> K;
    for (const auto& s : o.at) K.push_back(parse_point(s));
    if (K.empty()) throw InvalidInput("give the mutated points with --at x,y");
    auto D = sms_mutate(C, K, parse_sign(o.sign));
    write_dot(o, to_dot(D));
    if (o.json)
        emit(to_json(D));
    else
        std::cout << line(D) << "\n";
    return kOk;
}

int cmd_prune(const Options& o)
{
    auto C = configuration_from_json(input_json(o));
    if (!is_configuration(C)) throw InvalidInput("input is not a configuration");
    if (C.A.n != C.A.e() || C.A.ell % C.A.n != 0) throw InvalidInput("pruning needs ell a multiple of n");
    PruneType t = prune_type(C, C.A.ell / C.A.n);
    if (o.json)
        emit(Json{{"type", type_name(t)}});
    else
        std::cout << type_name(t) << "\n";
    return kOk;
}

int cmd_tilde(const Options& o)
{
    auto C = configuration_from_json(input_json(o));
    if (!is_configuration(C)) throw InvalidInput("input is not a configuration");
    auto D = tilde(C);
    write_dot(o, to_dot(D));
    if (o.json)
        emit(to_json(D));
    else
        std::cout << line(D) << "\n";
    return kOk;
}

Json fmap_json(const TwoTerm& T)
{
    auto c = fmap_correspondence(T);
    Json corr = Json::array();
    for (std::size_t i = 0; i < T.summands.size(); ++i)
        corr.push_back(Json{{"summand", to_json(T.summands[i])}, {"point", to_json(c.points[i])}});
    return Json{{"complex", to_json(T)}, {"configuration", to_json(c.configuration())}, {"correspondence", corr}};
}

int cmd_fmap(const Options& o)
{
    std::vector<TwoTerm> Ts;
    if (!o.in.empty()) {
        auto T = twoterm_from_json(input_json(o));
        if (!is_tilting(T)) throw InvalidInput("complex is not two-term tilting");
        Ts.push_back(T);
    } else {
        Ts = two_term_tilting(algebra(o));
    }
    std::vector<Json> out(Ts.size());
    parallel_for(Ts.size(), [&](std::size_t i) { out[i] = fmap_json(Ts[i]); });
    if (o.json) {
        if (!o.in.empty()) {
            emit(out[0]);
        } else {
            Json j = Json::array();
            for (auto& x : out) j.push_back(x);
            emit(j);
        }
        return kOk;
    }
    for (std::size_t i = 0; i < Ts.size(); ++i) {
        auto C = configuration_from_json(out[i]["configuration"]);
        std::cout << line(Ts[i]) << "  ->  " << line(C) << "\n";
    }
    return kOk;
}

int cmd_exchange_quiver(const Options& o)
{
    Algebra A = algebra(o);
    ExchangeQuiver Q;
    if (o.kind == "2tilt")
        Q = exchange_quiver_2tilt(A);
    else if (o.kind == "sms")
        Q = exchange_quiver_sms(A);
    else
        throw InvalidInput("--kind must be 2tilt or sms");

    std::vector<std::string> notes;
    Json j = to_json(Q);
    if (o.annotate && Q.kind == "2tilt") {
        std::vector<Configuration> img(Q.size());
        parallel_for(Q.size(), [&](std::size_t i) { img[i] = fmap(Q.complexes[i]); });
        Json fm = Json::array();
        for (const auto& C : img) {
            notes.push_back(line(C));
            fm.push_back(to_json(C));
        }
        j["fmap"] = fm;
    }
    write_dot(o, to_dot(Q, notes));
    if (o.json) {
        emit(j);
        return kOk;
    }
    std::cout << Q.kind << " objects " << Q.size() << " arrows " << Q.arrows.size() << "\n";
    for (std::size_t i = 0; i < Q.size(); ++i) {
        std::cout << i << ": " << (Q.kind == "2tilt" ? line(Q.complexes[i]) : line(Q.configurations[i]));
        if (i < notes.size()) std::cout << "  ->  " << notes[i];
        std::cout << "\n";
    }
    for (const auto& a : Q.arrows) {
        std::cout << a.from << " -> " << a.to << " at";
        for (auto p : a.orbit) std::cout << " " << p + 1;
        std::cout << "\n";
    }
    return kOk;
}

int cmd_verify(const Options& o)
{
    Algebra A = algebra(o);
    std::vector<std::string> suites;
    if (o.suite == "all")
        suites = suite_names();
    else
        suites = {o.suite};
    Json reports = Json::array();
    bool failed = false;
    for (const auto& s : suites) {
        Json r = verify(s, A);
        failed = failed || r["status"] == "fail";
        reports.push_back(r);
    }
    if (o.json) {
        emit(suites.size() == 1 ? reports[0] : reports);
    } else {
        for (const auto& r : reports) {
            std::cout << r["suite"].get<std::string>() << ": " << r["status"].get<std::string>();
            for (const auto& [k, v] : r["summary"].items())
                if (!v.is_array()) std::cout << " " << k << "=" << v.dump();
            std::cout << "\n";
            for (const auto& c : r["counterexamples"]) std::cout << "  " << c.dump() << "\n";
        }
    }
    return failed ? kVerifyFailed : kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Triangulations, Brauer trees, two-term tilting complexes and configurations of Nakayama algebras"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "Worker threads (results do not depend on it)")->check(CLI::NonNegativeNumber);

    Options o;
    auto in = [&](CLI::App* c) { c->add_option("--in", o.in, "Input JSON file, - for stdin"); };
    auto json = [&](CLI::App* c) { c->add_flag("--json", o.json, "Machine-readable output"); };
    auto dot = [&](CLI::App* c) { c->add_option("--dot", o.dot, "Write Graphviz output to PATH"); };
    auto alg = [&](CLI::App* c) {
        c->add_option("--n", o.n, "Number of simples")->required();
        c->add_option("--ell", o.ell, "Loewy length minus one")->required();
    };
    auto sign = [&](CLI::App* c) { c->add_option("--sign", o.sign, "minus or plus"); };

    std::map<std::string, std::function<int(const Options&)>> run;
    auto sub = [&](const char* name, const char* help, std::function<int(const Options&)> f) {
        run[name] = std::move(f);
        auto* c = app.add_subcommand(name, help);
        json(c);
        return c;
    };

    auto* c = sub("enumerate-triangulations", "All triangulations of the punctured e-gon", cmd_enumerate_triangulations);
    c->add_option("--e", o.e, "Rank")->required();
    c->add_flag("--count", o.count, "Print only the number");

    c = sub("flip", "Flip one arc", cmd_flip);
    in(c);
    c->add_option("--arc", o.arc, "Arc as 1-based index, <*,j> or <j,i>")->required();

    c = sub("unfold", "Lift a triangulation to rank n", cmd_unfold);
    in(c);
    c->add_option("--n", o.n, "Target rank")->required();

    c = sub("fold", "Fold a rotation-symmetric triangulation to rank e", cmd_fold);
    in(c);
    c->add_option("--e", o.e, "Target rank")->required();

    c = sub("psi", "Brauer tree of a triangulation", cmd_psi);
    in(c);
    sign(c);
    dot(c);
    c->add_option("--m", o.m, "Multiplicity of the exceptional vertex");

    c = sub("phi", "Two-term tilting complex of a triangulation", cmd_phi);
    in(c);
    sign(c);
    alg(c);

    c = sub("kauer", "Kauer move on a Brauer tree", cmd_kauer);
    in(c);
    sign(c);
    dot(c);
    c->add_option("--label", o.label, "Edge label")->required();

    c = sub("enumerate-sms", "All configurations of A_n^ell", cmd_enumerate_sms);
    alg(c);
    c->add_flag("--count", o.count, "Print only the number");

    c = sub("is-config", "Check a configuration", cmd_is_config);
    in(c);
    dot(c);

    c = sub("sms-mutate", "Mutate a configuration at a Nakayama-stable subset", cmd_sms_mutate);
    in(c);
    sign(c);
    dot(c);
    c->add_option("--at", o.at, "Mutated point x,y (repeatable)");

    c = sub("prune", "Bottom/Top type by tree pruning", cmd_prune);
    in(c);

    c = sub("tilde", "Collapse A_e^{em} to A_e^e", cmd_tilde);
    in(c);
    dot(c);

    c = sub("fmap", "Configuration of a two-term tilting complex (or of all, given --n/--ell)", cmd_fmap);
    in(c);
    c->add_option("--n", o.n, "Number of simples");
    c->add_option("--ell", o.ell, "Loewy length minus one");

    c = sub("exchange-quiver", "Exchange quiver of 2tilt or sms", cmd_exchange_quiver);
    alg(c);
    dot(c);
    c->add_option("--kind", o.kind, "2tilt or sms");
    c->add_flag("--annotate", o.annotate, "Attach fmap images to 2tilt objects");

    c = sub("verify", "Run verification suites", cmd_verify);
    alg(c);
    c->add_option("--suite", o.suite, "counts, bijection, mutation-compat, embedding, types, tilde, functors or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    set_threads(threads);
    try {
        for (auto* s : app.get_subcommands()) return run.at(s->get_name())(o);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SymmetryFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
