#include "nak/json_io.hpp"

#include "nak/errors.hpp"

namespace nak {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const nlohmann::json::exception& ex) {
        throw InvalidInput(std::string("malformed ") + what + " JSON: " + ex.what());
    }
}

int get_int(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
        throw InvalidInput(std::string("missing integer field \"") + key + "\"");
    return j.at(key).get<int>();
}

const Json& get_array(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
        throw InvalidInput(std::string("missing array field \"") + key + "\"");
    return j.at(key);
}

Algebra algebra_from(const Json& j)
{
    int n = get_int(j, "n"), ell = get_int(j, "ell");
    if (n < 1 || ell < 1) throw InvalidInput("n and ell must be positive");
    return Algebra(n, ell);
}

}  // namespace

Json to_json(const Arc& a, int)
{
    Json j;
    if (a.is_projective()) {
        j["kind"] = "projective";
        j["terminal"] = a.terminal_or_initial;
    } else {
        j["kind"] = "inner";
        j["initial"] = a.initial();
        j["length"] = a.length;
    }
    return j;
}

Arc arc_from_json(const Json& j, int e)
{
    return guarded("arc", [&] {
        if (!j.is_object() || !j.contains("kind")) throw InvalidInput("arc needs a kind");
        std::string kind = j.at("kind").get<std::string>();
        Arc a;
        if (kind == "projective")
            a = Arc::projective(get_int(j, "terminal"));
        else if (kind == "inner")
            a = Arc::inner(get_int(j, "initial"), get_int(j, "length"));
        else
            throw InvalidInput("unknown arc kind " + kind);
        validate_arc(a, e);
        return a;
    });
}

Json to_json(const Triangulation& X)
{
    Json arcs = Json::array();
    for (const auto& a : X.arcs) arcs.push_back(to_json(a, X.e));
    return Json{{"e", X.e}, {"arcs", arcs}};
}

Triangulation triangulation_from_json(const Json& j)
{
    return guarded("triangulation", [&] {
        int e = get_int(j, "e");
        if (e < 1) throw InvalidInput("rank must be positive");
        std::vector<Arc> arcs;
        for (const auto& a : get_array(j, "arcs")) arcs.push_back(arc_from_json(a, e));
        if (!is_triangulation(arcs, e)) throw InvalidInput("arcs do not form a triangulation");
        return Triangulation(e, arcs);
    });
}

Json to_json(const BrauerTree& G)
{
    Json edges = Json::array();
    for (const auto& x : G.edges) edges.push_back(Json{{"label", x.label}, {"ends", {x.u, x.v}}});
    Json cyc = Json::object();
    for (const auto& [v, c] : G.cyclic) cyc[std::to_string(v)] = c;
    return Json{{"m", G.m}, {"exceptional", G.exceptional}, {"vertices", G.vertices}, {"edges", edges}, {"cyclic", cyc}};
}

BrauerTree brauer_from_json(const Json& j)
{
    return guarded("Brauer tree", [&] {
        BrauerTree G;
        G.m = get_int(j, "m");
        G.exceptional = get_int(j, "exceptional");
        G.vertices = get_array(j, "vertices").get<std::vector<int>>();
        for (const auto& x : get_array(j, "edges")) {
            auto ends = get_array(x, "ends").get<std::vector<int>>();
            if (ends.size() != 2) throw InvalidInput("edge needs two ends");
            G.edges.push_back({get_int(x, "label"), ends[0], ends[1]});
        }
        if (!j.contains("cyclic") || !j.at("cyclic").is_object()) throw InvalidInput("missing cyclic orders");
        for (const auto& [k, v] : j.at("cyclic").items()) G.cyclic[std::stoi(k)] = v.get<std::vector<int>>();
        G.validate();
        G.normalize();
        return G;
    });
}

Json to_json(const Summand& X)
{
    if (X.is_stalk()) return Json{{"stalk", X.a}, {"deg", X.deg}};
    return Json{{"src", X.a}, {"tgt", X.b}};
}

Summand summand_from_json(const Json& j, const Algebra& A)
{
    return guarded("summand", [&] {
        Summand X;
        if (j.is_object() && j.contains("stalk")) {
            X = Summand::stalk(get_int(j, "stalk"), get_int(j, "deg"));
        } else {
            int a = get_int(j, "src"), b = get_int(j, "tgt");
            if (a < 1 || a > A.n || b < 1 || b > A.n) throw InvalidInput("projective index out of range");
            int s = minimal_path(a, b, A);
            if (s < 0) throw InvalidInput("no radical map between these projectives");
            X = Summand::diff(a, b, s);
        }
        validate(X, A);
        return X;
    });
}

Json to_json(const TwoTerm& T)
{
    Json s = Json::array();
    for (const auto& X : T.canonical()) s.push_back(to_json(X));
    return Json{{"n", T.A.n}, {"ell", T.A.ell}, {"summands", s}};
}

TwoTerm twoterm_from_json(const Json& j)
{
    return guarded("complex", [&] {
        TwoTerm T{algebra_from(j), {}};
        for (const auto& x : get_array(j, "summands")) T.summands.push_back(summand_from_json(x, T.A));
        return T;
    });
}

Json to_json(const Ind& p) { return Json::array({p.socle, p.length}); }

Ind ind_from_json(const Json& j)
{
    return guarded("point", [&] {
        if (!j.is_array() || j.size() != 2) throw InvalidInput("point must be [x, y]");
        return Ind{j[0].get<int>(), j[1].get<int>()};
    });
}

Json to_json(const Configuration& C)
{
    Json pts = Json::array();
    for (const auto& p : C.points) pts.push_back(to_json(p));
    return Json{{"n", C.A.n}, {"ell", C.A.ell}, {"points", pts}};
}

Configuration configuration_from_json(const Json& j)
{
    return guarded("configuration", [&] {
        Algebra A = algebra_from(j);
        std::vector<Ind> pts;
        for (const auto& p : get_array(j, "points")) pts.push_back(ind_from_json(p));
        return Configuration(A, pts);
    });
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw InvalidInput(std::string("invalid JSON: ") + ex.what());
    }
}

}  // namespace nak
