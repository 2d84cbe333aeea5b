#include "tncomp/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tncomp {

using nlohmann::json;

namespace {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("complex entries must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

json tensor_to_json(const Tensor& t) {
    json j;
    j["shape"] = t.shape();
    json entries = json::array();
    for (const Complex& z : t.entries()) entries.push_back(complex_to_json(z));
    j["entries"] = std::move(entries);
    if (t.has_labels()) j["labels"] = t.leg_labels();
    return j;
}

Tensor tensor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("entries"))
        throw std::invalid_argument("tensor document needs 'shape' and 'entries'");
    std::vector<std::size_t> shape;
    for (const auto& e : j.at("shape")) {
        if (!e.is_number_unsigned() || e.get<std::uint64_t>() < 1)
            throw std::invalid_argument("tensor extents must be positive integers");
        shape.push_back(e.get<std::size_t>());
    }
    std::vector<Complex> entries;
    for (const auto& e : j.at("entries")) entries.push_back(complex_from_json(e));
    Tensor t(std::move(shape), std::move(entries));  // verifies the count
    if (j.contains("labels")) {
        std::vector<std::string> labels;
        for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
        t.set_leg_labels(std::move(labels));
    }
    return t;
}

json template_to_json(const TemplateSpec& tmpl, const NetworkSpec* net) {
    json j;
    json vertices = json::array();
    for (const auto& v : tmpl.vertices) {
        json jv;
        jv["id"] = v.id;
        jv["filled"] = v.filled;
        if (net != nullptr && v.filled) {
            auto it = net->assignment.find(v.id);
            if (it != net->assignment.end()) {
                jv["tensor"] = tensor_to_json(it->second.tensor);
                jv["edge_order"] = it->second.edge_order;
            }
        }
        vertices.push_back(std::move(jv));
    }
    j["vertices"] = std::move(vertices);
    json edges = json::array();
    for (const auto& e : tmpl.edges)
        edges.push_back({{"id", e.id}, {"from", e.from}, {"to", e.to}, {"dim", e.dim}});
    j["edges"] = std::move(edges);
    return j;
}

void template_from_json(const json& j, TemplateSpec& tmpl, NetworkSpec* net) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("template document needs 'vertices' and 'edges'");
    for (const auto& jv : j.at("vertices")) {
        TemplateVertex v;
        v.id = jv.at("id").get<std::string>();
        v.filled = jv.at("filled").get<bool>();
        tmpl.vertices.push_back(v);
        if (net != nullptr && jv.contains("tensor")) {
            VertexAssignment a;
            a.tensor = tensor_from_json(jv.at("tensor"));
            if (!jv.contains("edge_order"))
                throw std::invalid_argument("vertex '" + v.id + "' has a tensor but no edge_order");
            for (const auto& e : jv.at("edge_order")) a.edge_order.push_back(e.get<std::string>());
            net->assignment[v.id] = std::move(a);
        }
    }
    for (const auto& je : j.at("edges")) {
        TemplateEdge e;
        e.id = je.at("id").get<std::string>();
        e.from = je.at("from").get<std::string>();
        e.to = je.at("to").get<std::string>();
        if (!je.at("dim").is_number_unsigned() || je.at("dim").get<std::uint64_t>() < 1)
            throw std::invalid_argument("edge '" + e.id + "' needs a positive integer dimension");
        e.dim = je.at("dim").get<std::size_t>();
        tmpl.edges.push_back(std::move(e));
    }
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON document");
    return j;
}

// Missing keys and wrong value types surface as json exceptions; translate
// them so callers see the documented error type.
template <typename F>
auto strict(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed document: ") + e.what());
    }
}

}  // namespace

static Mps mps_from_text_impl(const std::string& text);
static EncodingCircuit circuit_from_text_impl(const std::string& text);
static std::vector<std::vector<Complex>> states_from_text_impl(const std::string& text);

std::string tensor_to_text(const Tensor& t) { return tensor_to_json(t).dump(2); }

Tensor tensor_from_text(const std::string& text) {
    return strict([&] { return tensor_from_json(parse(text)); });
}

std::string template_to_text(const TemplateSpec& tmpl) {
    return template_to_json(tmpl, nullptr).dump(2);
}

TemplateSpec template_from_text(const std::string& text) {
    return strict([&] {
        TemplateSpec tmpl;
        template_from_json(parse(text), tmpl, nullptr);
        return tmpl;
    });
}

std::string network_to_text(const NetworkSpec& net) {
    return template_to_json(net.tmpl, &net).dump(2);
}

NetworkSpec network_from_text(const std::string& text) {
    return strict([&] {
        NetworkSpec net;
        template_from_json(parse(text), net.tmpl, &net);
        return net;
    });
}

std::string mps_to_text(const Mps& mps) {
    json j;
    json boundary;
    switch (mps.boundary.kind) {
        case BoundaryKind::open: {
            boundary["type"] = "open";
            json left = json::array(), right = json::array();
            for (const Complex& z : mps.boundary.left) left.push_back(complex_to_json(z));
            for (const Complex& z : mps.boundary.right) right.push_back(complex_to_json(z));
            boundary["left"] = std::move(left);
            boundary["right"] = std::move(right);
            break;
        }
        case BoundaryKind::periodic:
            boundary["type"] = "periodic";
            break;
        case BoundaryKind::variable:
            boundary["type"] = "variable";
            break;
    }
    j["boundary"] = std::move(boundary);
    j["n"] = mps.n();
    json sites = json::array();
    for (const Tensor& site : mps.sites) sites.push_back(tensor_to_json(site));
    j["sites"] = std::move(sites);
    return j.dump(2);
}

Mps mps_from_text(const std::string& text) {
    return strict([&] { return mps_from_text_impl(text); });
}

static Mps mps_from_text_impl(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("boundary") || !j.contains("sites"))
        throw std::invalid_argument("chain document needs 'boundary' and 'sites'");
    Mps mps;
    const json& boundary = j.at("boundary");
    const std::string type = boundary.at("type").get<std::string>();
    if (type == "open") {
        std::vector<Complex> left, right;
        for (const auto& e : boundary.at("left")) left.push_back(complex_from_json(e));
        for (const auto& e : boundary.at("right")) right.push_back(complex_from_json(e));
        mps.boundary = Boundary::open(std::move(left), std::move(right));
    } else if (type == "periodic") {
        mps.boundary = Boundary::periodic();
    } else if (type == "variable") {
        mps.boundary = Boundary::variable();
    } else {
        throw std::invalid_argument("unknown boundary type '" + type + "'");
    }
    for (const auto& js : j.at("sites")) mps.sites.push_back(tensor_from_json(js));
    if (j.contains("n") && j.at("n").get<std::size_t>() != mps.sites.size())
        throw std::invalid_argument("declared site count does not match the site list");
    mps.validate();
    return mps;
}

std::string circuit_to_text(const EncodingCircuit& circuit) {
    json j;
    j["input_dims"] = circuit.input_dims;
    j["memory_dim"] = circuit.memory_dim;
    json layers = json::array();
    for (const auto& layer : circuit.layers) {
        json jl = json::array();
        for (const auto& gate : layer) {
            json jg;
            jg["site_begin"] = gate.site_begin;
            jg["site_end"] = gate.site_end;
            jg["in_dims"] = gate.iso.in_dims;
            jg["isometry"] = tensor_to_json(gate.iso.matrix);
            jl.push_back(std::move(jg));
        }
        layers.push_back(std::move(jl));
    }
    j["layers"] = std::move(layers);
    return j.dump(2);
}

EncodingCircuit circuit_from_text(const std::string& text) {
    return strict([&] { return circuit_from_text_impl(text); });
}

static EncodingCircuit circuit_from_text_impl(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("layers") || !j.contains("input_dims"))
        throw std::invalid_argument("circuit document needs 'input_dims' and 'layers'");
    EncodingCircuit circuit;
    for (const auto& d : j.at("input_dims")) circuit.input_dims.push_back(d.get<std::size_t>());
    circuit.memory_dim = j.at("memory_dim").get<std::size_t>();
    for (const auto& jl : j.at("layers")) {
        std::vector<EncodingGate> layer;
        for (const auto& jg : jl) {
            EncodingGate gate;
            gate.site_begin = jg.at("site_begin").get<std::size_t>();
            gate.site_end = jg.at("site_end").get<std::size_t>();
            for (const auto& d : jg.at("in_dims")) gate.iso.in_dims.push_back(d.get<std::size_t>());
            gate.iso.matrix = tensor_from_json(jg.at("isometry"));
            if (gate.iso.matrix.order() != 2)
                throw std::invalid_argument("gate isometries must be matrices");
            gate.iso.out_dim = gate.iso.matrix.shape()[0];
            gate.iso.support_rank = gate.iso.out_dim;
            std::size_t in_total = 1;
            for (std::size_t d : gate.iso.in_dims) in_total *= d;
            if (in_total != gate.iso.matrix.shape()[1])
                throw std::invalid_argument("gate in_dims do not match the isometry extent");
            layer.push_back(std::move(gate));
        }
        circuit.layers.push_back(std::move(layer));
    }
    return circuit;
}

std::string states_to_text(const std::vector<std::vector<Complex>>& states) {
    json j;
    json list = json::array();
    for (const auto& s : states) {
        json v = json::array();
        for (const Complex& z : s) v.push_back(complex_to_json(z));
        list.push_back(std::move(v));
    }
    j["states"] = std::move(list);
    return j.dump(2);
}

std::vector<std::vector<Complex>> states_from_text(const std::string& text) {
    return strict([&] { return states_from_text_impl(text); });
}

static std::vector<std::vector<Complex>> states_from_text_impl(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("states"))
        throw std::invalid_argument("states document needs a 'states' list");
    std::vector<std::vector<Complex>> states;
    for (const auto& js : j.at("states")) {
        std::vector<Complex> s;
        for (const auto& e : js) s.push_back(complex_from_json(e));
        states.push_back(std::move(s));
    }
    return states;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << content;
}

}  // namespace tncomp
