#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polynet/errors.hpp"
#include "polynet/poly.hpp"
#include "polynet/rational.hpp"

namespace polynet {

struct Vertex {
    std::string id;
    Rational mass{1};                   // > 0
    Poly pinning;                       // on-site potential, may be zero
    Rational gamma{0};                  // bath coupling, > 0 iff bath
    bool bath = false;
    std::optional<Rational> temperature; // carried for model completeness, never consumed
};

/// One stored orientation per edge: `potential` is a function of q_u - q_v.
/// The reverse orientation is the reflection, never stored.
struct Edge {
    std::string u;
    std::string v;
    Poly potential;
};

enum class ModeKind { Anharmonic, Harmonic, Unsupported };

struct Mode {
    ModeKind kind = ModeKind::Unsupported;
    std::string reason; // set for Unsupported
};

/// Adjusted representation of V''_{cv}/(m_c m_v) together with its shift
/// delta_{cv}: the label of the equivalence class a target vertex belongs to.
struct ClassKey {
    Poly key;
    Rational shift;
};

class Network {
public:
    Network(std::vector<Vertex> vertices, std::vector<Edge> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges)) {
        validate();
    }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(const std::string& id) const { return index_.count(id) > 0; }

    const Vertex& vertex(const std::string& id) const {
        const auto it = index_.find(id);
        if (it == index_.end()) throw UnknownVertex("unknown vertex '" + id + "'");
        return vertices_[static_cast<std::size_t>(it->second)];
    }

    /// Bath vertices V_* in input order.
    std::vector<std::string> bath_set() const {
        std::vector<std::string> out;
        for (const auto& v : vertices_)
            if (v.bath) out.push_back(v.id);
        return out;
    }

    /// First neighbors T^v, ascending id.
    std::vector<std::string> neighbors(const std::string& id) const {
        vertex(id);
        std::vector<std::string> out;
        for (const auto& e : edges_) {
            if (e.u == id) out.push_back(e.v);
            if (e.v == id) out.push_back(e.u);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool has_edge(const std::string& a, const std::string& b) const {
        return find_edge(a, b) != nullptr;
    }

    /// V_{cv} as a function of q_c - q_v: the stored polynomial when the edge
    /// is stored as (c, v), its reflection when stored as (v, c).
    Poly interaction_from(const std::string& c, const std::string& v) const {
        const Edge* e = find_edge(c, v);
        if (e == nullptr) throw NoSuchEdge("no edge {" + c + "," + v + "}");
        return e->u == c ? e->potential : reflect(e->potential);
    }

    ClassKey class_key(const std::string& c, const std::string& v) const {
        const Poly second = derivative(derivative(interaction_from(c, v)));
        if (second.degree() < 1)
            throw DegreeTooLow("edge {" + c + "," + v + "} is harmonic: no class key");
        const Rational scale = vertex(c).mass * vertex(v).mass;
        const auto adj = adjusted_representation(second / scale);
        return ClassKey{adj.poly, adj.delta};
    }

    Mode mode() const {
        bool all_cubic_up = true;
        bool all_quadratic = true;
        std::string harmonic_witness, anharmonic_witness;
        for (const auto& e : edges_) {
            if (e.potential.degree() >= 3) {
                all_quadratic = false;
                anharmonic_witness = "{" + e.u + "," + e.v + "}";
            } else {
                all_cubic_up = false;
                harmonic_witness = "{" + e.u + "," + e.v + "}";
            }
        }
        if (all_cubic_up) return Mode{ModeKind::Anharmonic, ""};
        if (!all_quadratic)
            return Mode{ModeKind::Unsupported, "mixed harmonic/anharmonic interactions: edge " +
                                                   harmonic_witness + " is harmonic, edge " +
                                                   anharmonic_witness + " is not"};
        for (const auto& v : vertices_)
            if (v.pinning.degree() > 2)
                return Mode{ModeKind::Unsupported, "harmonic interactions with anharmonic pinning at vertex '" +
                                                       v.id + "'"};
        return Mode{ModeKind::Harmonic, ""};
    }

    bool connected() const {
        if (vertices_.empty()) return true;
        std::vector<std::string> stack{vertices_.front().id};
        std::map<std::string, bool> seen{{vertices_.front().id, true}};
        while (!stack.empty()) {
            const std::string cur = stack.back();
            stack.pop_back();
            for (const auto& n : neighbors(cur))
                if (!seen[n]) {
                    seen[n] = true;
                    stack.push_back(n);
                }
        }
        for (const auto& v : vertices_)
            if (!seen[v.id]) return false;
        return true;
    }

private:
    const Edge* find_edge(const std::string& a, const std::string& b) const {
        for (const auto& e : edges_)
            if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return &e;
        return nullptr;
    }

    void validate() {
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            const Vertex& v = vertices_[i];
            if (v.id.empty()) throw ValidationError("vertex with empty id");
            if (index_.count(v.id))
                throw ValidationError("duplicate vertex id '" + v.id + "'");
            index_[v.id] = static_cast<int>(i);
            if (v.mass <= 0)
                throw ValidationError("mass of vertex '" + v.id + "' must be positive, got " +
                                      rational_str(v.mass));
            if (v.gamma < 0)
                throw ValidationError("gamma of vertex '" + v.id + "' must be nonnegative");
            if (v.bath != (v.gamma > 0))
                throw ValidationError("vertex '" + v.id + "': gamma must be positive exactly when bath");
            if (v.temperature && !v.bath)
                throw ValidationError("vertex '" + v.id + "' has a temperature but no bath");
            if (v.temperature && *v.temperature <= 0)
                throw ValidationError("temperature of vertex '" + v.id + "' must be positive");
        }
        for (const auto& e : edges_) {
            if (e.u == e.v) throw ValidationError("self-edge {" + e.u + "," + e.v + "}");
            if (!index_.count(e.u) || !index_.count(e.v))
                throw ValidationError("edge {" + e.u + "," + e.v + "} references an undeclared vertex");
            if (e.potential.degree() < 2)
                throw ValidationError("edge {" + e.u + "," + e.v + "} needs an interaction of degree >= 2");
        }
        for (std::size_t i = 0; i < edges_.size(); ++i)
            for (std::size_t j = i + 1; j < edges_.size(); ++j) {
                const bool same = (edges_[i].u == edges_[j].u && edges_[i].v == edges_[j].v) ||
                                  (edges_[i].u == edges_[j].v && edges_[i].v == edges_[j].u);
                if (same)
                    throw ValidationError("duplicate edge {" + edges_[i].u + "," + edges_[i].v + "}");
            }
    }

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::map<std::string, int> index_;
};

namespace detail {

inline std::vector<std::string> poly_to_strings(const Poly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(rational_str(c));
    return out;
}

inline Poly poly_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": polynomial must be an array of rational strings");
    std::vector<Rational> c;
    for (const auto& item : j) {
        if (!item.is_string()) throw ParseError(where + ": polynomial coefficients must be strings");
        c.push_back(parse_rational(item.get<std::string>()));
    }
    return Poly(std::move(c));
}

inline Rational rational_field(const nlohmann::json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
    if (!j.at(key).is_string()) throw ParseError(where + ": field '" + key + "' must be a rational string");
    return parse_rational(j.at(key).get<std::string>());
}

inline std::string string_field(const nlohmann::json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_string())
        throw ParseError(where + ": missing string field '" + key + "'");
    return j.at(key).get<std::string>();
}

/// Shared by parse_network and parse_shape; shapes may omit edge potentials.
inline Network parse_document(const std::string& text, bool require_potentials) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw ParseError("document must be an object with 'vertices' and 'edges' arrays");

    std::vector<Vertex> vertices;
    for (const auto& jv : doc.at("vertices")) {
        Vertex v;
        v.id = string_field(jv, "id", "vertex");
        const std::string where = "vertex '" + v.id + "'";
        v.mass = rational_field(jv, "mass", where);
        v.gamma = rational_field(jv, "gamma", where);
        if (!jv.contains("bath") || !jv.at("bath").is_boolean())
            throw ParseError(where + ": missing boolean field 'bath'");
        v.bath = jv.at("bath").get<bool>();
        if (jv.contains("temperature")) v.temperature = rational_field(jv, "temperature", where);
        if (jv.contains("pinning")) v.pinning = poly_from_json(jv.at("pinning"), where);
        vertices.push_back(std::move(v));
    }

    std::vector<Edge> edges;
    for (const auto& je : doc.at("edges")) {
        Edge e;
        e.u = string_field(je, "u", "edge");
        e.v = string_field(je, "v", "edge");
        const std::string where = "edge {" + e.u + "," + e.v + "}";
        if (je.contains("potential")) {
            e.potential = poly_from_json(je.at("potential"), where);
        } else if (require_potentials) {
            throw ParseError(where + ": missing field 'potential'");
        } else {
            e.potential = Poly::monomial(2); // placeholder; replaced by the trial driver
        }
        edges.push_back(std::move(e));
    }
    return Network(std::move(vertices), std::move(edges));
}

} // namespace detail

inline Network parse_network(const std::string& text) {
    return detail::parse_document(text, true);
}

/// A shape is a network whose edges may omit their potentials; used as the
/// input of randomized genericity trials.
inline Network parse_shape(const std::string& text) {
    return detail::parse_document(text, false);
}

inline std::string serialize_network(const Network& net) {
    nlohmann::ordered_json doc;
    doc["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : net.vertices()) {
        nlohmann::ordered_json jv;
        jv["id"] = v.id;
        jv["mass"] = rational_str(v.mass);
        jv["gamma"] = rational_str(v.gamma);
        jv["bath"] = v.bath;
        if (v.temperature) jv["temperature"] = rational_str(*v.temperature);
        if (!v.pinning.is_zero()) jv["pinning"] = detail::poly_to_strings(v.pinning);
        doc["vertices"].push_back(std::move(jv));
    }
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : net.edges()) {
        nlohmann::ordered_json je;
        je["u"] = e.u;
        je["v"] = e.v;
        je["potential"] = detail::poly_to_strings(e.potential);
        doc["edges"].push_back(std::move(je));
    }
    return doc.dump(2) + "\n";
}

} // namespace polynet
