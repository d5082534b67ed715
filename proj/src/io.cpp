#include "hopfstab/io.hpp"

#include "json.hpp"

namespace hopfstab {

using json = nlohmann::json;

namespace {

constexpr int kSchema = 1;

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

json field_json(const FieldSpec& f) {
    json j;
    if (f.kind == FieldKind::Rationals) {
        j["kind"] = "Q";
    } else {
        j["kind"] = "Fp";
        j["p"] = f.modulus;
    }
    return j;
}

void require_keys(const json& obj, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional, const std::string& path) {
    if (!obj.is_object()) throw ParseError(path + ": expected an object");
    for (const auto& k : required)
        if (!obj.contains(k)) throw ParseError(path + ": missing key \"" + k + "\"");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const std::string& k = it.key();
        bool known = false;
        for (const auto& r : required) known = known || r == k;
        for (const auto& o : optional) known = known || o == k;
        if (!known) throw ParseError(path + ": unknown key \"" + k + "\"");
    }
}

FieldSpec field_from(const json& j, const std::string& path) {
    if (!j.contains("kind") || !j["kind"].is_string())
        throw ParseError(path + ": field spec needs a string \"kind\"");
    std::string k = j["kind"].get<std::string>();
    if (k == "Q") {
        require_keys(j, {"kind"}, {}, path);
        return FieldSpec::rationals();
    }
    if (k == "Fp") {
        require_keys(j, {"kind", "p"}, {}, path);
        if (!j["p"].is_number_unsigned()) throw ParseError(path + ": modulus must be unsigned");
        return FieldSpec::prime(j["p"].get<std::uint64_t>());
    }
    throw ParseError(path + ": unknown field kind \"" + k + "\"");
}

std::size_t index_from(const json& e, std::size_t pos, std::size_t component, std::size_t bound,
                       const std::string& path) {
    std::string where = path + " entry " + std::to_string(pos);
    if (component >= e.size())
        throw ParseError(where + ": missing component " + std::to_string(component));
    if (!e[component].is_number_unsigned())
        throw ParseError(where + ": component " + std::to_string(component) +
                         " must be an unsigned index");
    std::size_t v = e[component].get<std::size_t>();
    if (v >= bound)
        throw ParseError(where + ": index " + std::to_string(v) + " out of range (dimension " +
                         std::to_string(bound) + ")");
    return v;
}

Scalar scalar_from(const FieldSpec& f, const json& e, std::size_t pos, std::size_t component,
                   const std::string& path) {
    std::string where = path + " entry " + std::to_string(pos);
    if (component >= e.size())
        throw ParseError(where + ": missing component " + std::to_string(component));
    if (!e[component].is_string()) throw ParseError(where + ": scalar must be a string");
    Scalar s;
    try {
        s = Scalar::parse(f, e[component].get<std::string>());
    } catch (const FieldError& err) {
        throw ParseError(where + ": " + err.what());
    }
    if (s.is_zero()) throw ParseError(where + ": zero entries must be omitted");
    return s;
}

void check_entry_arity(const json& e, std::size_t pos, std::size_t arity,
                       const std::string& path) {
    std::string where = path + " entry " + std::to_string(pos);
    if (!e.is_array()) throw ParseError(where + ": expected an array");
    if (e.size() > arity)
        throw ParseError(where + ": expected " + std::to_string(arity) + " components");
}

json vec_entries(const Vec& v) {
    json arr = json::array();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) arr.push_back(json::array({i, v[i].str()}));
    return arr;
}

Vec vec_from(const FieldSpec& f, const json& arr, std::size_t dim, const std::string& path) {
    if (!arr.is_array()) throw ParseError(path + ": expected an array");
    Vec v = zero_vec(f, dim);
    std::vector<bool> seen(dim, false);
    for (std::size_t p = 0; p < arr.size(); ++p) {
        check_entry_arity(arr[p], p, 2, path);
        std::size_t i = index_from(arr[p], p, 0, dim, path);
        if (seen[i]) throw ParseError(path + " entry " + std::to_string(p) + ": duplicate index");
        seen[i] = true;
        v[i] = scalar_from(f, arr[p], p, 1, path);
    }
    return v;
}

json matrix_entries(const Matrix& m) {
    json arr = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) arr.push_back(json::array({i, j, m.at(i, j).str()}));
    return arr;
}

Matrix matrix_from(const FieldSpec& f, const json& arr, std::size_t rows, std::size_t cols,
                   const std::string& path) {
    if (!arr.is_array()) throw ParseError(path + ": expected an array");
    Matrix m(f, rows, cols);
    std::vector<bool> seen(rows * cols, false);
    for (std::size_t p = 0; p < arr.size(); ++p) {
        check_entry_arity(arr[p], p, 3, path);
        std::size_t i = index_from(arr[p], p, 0, rows, path);
        std::size_t j = index_from(arr[p], p, 1, cols, path);
        if (seen[i * cols + j])
            throw ParseError(path + " entry " + std::to_string(p) + ": duplicate index");
        seen[i * cols + j] = true;
        m.at(i, j) = scalar_from(f, arr[p], p, 2, path);
    }
    return m;
}

json tensor_entries(const Tensor3& t) {
    json arr = json::array();
    for (std::size_t i = 0; i < t.dim1(); ++i)
        for (std::size_t j = 0; j < t.dim2(); ++j)
            for (std::size_t k = 0; k < t.dim3(); ++k)
                if (!t.at(i, j, k).is_zero())
                    arr.push_back(json::array({i, j, k, t.at(i, j, k).str()}));
    return arr;
}

Tensor3 tensor_from(const FieldSpec& f, const json& arr, std::size_t n1, std::size_t n2,
                    std::size_t n3, const std::string& path) {
    if (!arr.is_array()) throw ParseError(path + ": expected an array");
    Tensor3 t(f, n1, n2, n3);
    for (std::size_t p = 0; p < arr.size(); ++p) {
        check_entry_arity(arr[p], p, 4, path);
        std::size_t i = index_from(arr[p], p, 0, n1, path);
        std::size_t j = index_from(arr[p], p, 1, n2, path);
        std::size_t k = index_from(arr[p], p, 2, n3, path);
        if (!t.at(i, j, k).is_zero())
            throw ParseError(path + " entry " + std::to_string(p) + ": duplicate index");
        t.at(i, j, k) = scalar_from(f, arr[p], p, 3, path);
    }
    return t;
}

std::size_t dim_from(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.contains(key) || !obj[key].is_number_unsigned())
        throw ParseError(path + ": \"" + key + "\" must be an unsigned number");
    return obj[key].get<std::size_t>();
}

json hopf_body(const HopfData& h) {
    json j;
    j["dim"] = h.dim();
    j["mult"] = tensor_entries(h.alg.mult);
    j["comult"] = tensor_entries(h.coalg.comult);
    j["unit"] = vec_entries(h.alg.unit);
    j["counit"] = vec_entries(h.coalg.counit);
    j["antipode"] = matrix_entries(h.antipode);
    return j;
}

HopfData hopf_from(const FieldSpec& f, const json& j, const std::string& path) {
    require_keys(j, {"dim", "mult", "comult", "unit", "counit", "antipode"}, {}, path);
    std::size_t n = dim_from(j, "dim", path);
    AlgebraData a;
    a.field = f;
    a.dim = n;
    a.mult = tensor_from(f, j["mult"], n, n, n, path + ".mult");
    a.unit = vec_from(f, j["unit"], n, path + ".unit");
    CoalgebraData c;
    c.field = f;
    c.dim = n;
    c.comult = tensor_from(f, j["comult"], n, n, n, path + ".comult");
    c.counit = vec_from(f, j["counit"], n, path + ".counit");
    Matrix s = matrix_from(f, j["antipode"], n, n, path + ".antipode");
    try {
        return HopfData::make(a, c, s);
    } catch (const ShapeError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

json alg_body(const AlgebraData& a) {
    json j;
    j["dim"] = a.dim;
    j["mult"] = tensor_entries(a.mult);
    j["unit"] = vec_entries(a.unit);
    return j;
}

AlgebraData alg_from(const FieldSpec& f, const json& j, const std::string& path) {
    require_keys(j, {"dim", "mult", "unit"}, {}, path);
    std::size_t n = dim_from(j, "dim", path);
    AlgebraData a;
    a.field = f;
    a.dim = n;
    a.mult = tensor_from(f, j["mult"], n, n, n, path + ".mult");
    a.unit = vec_from(f, j["unit"], n, path + ".unit");
    return a;
}

std::string side_str(Side s) { return s == Side::Left ? "left" : "right"; }

Side side_from(const json& j, const std::string& path) {
    if (!j.is_string()) throw ParseError(path + ": side must be a string");
    std::string s = j.get<std::string>();
    if (s == "left") return Side::Left;
    if (s == "right") return Side::Right;
    throw ParseError(path + ": side must be \"left\" or \"right\"");
}

json envelope(const FieldSpec& f, const std::string& kind) {
    json j;
    j["schema"] = kSchema;
    j["field"] = field_json(f);
    j["kind"] = kind;
    return j;
}

std::string finish(const json& j) { return j.dump(2) + "\n"; }

json parse_envelope(const std::string& text, const std::string& kind, FieldSpec* f_out) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("document: expected an object");
    if (!j.contains("schema")) throw ParseError("document: missing key \"schema\"");
    if (!j["schema"].is_number_unsigned() || j["schema"].get<int>() != kSchema)
        throw ParseError("document: unknown schema version");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw ParseError("document: missing kind");
    if (j["kind"].get<std::string>() != kind)
        throw ParseError("document: expected kind \"" + kind + "\", found \"" +
                         j["kind"].get<std::string>() + "\"");
    if (f_out) {
        if (!j.contains("field")) throw ParseError("document: missing key \"field\"");
        *f_out = field_from(j["field"], "field");
    }
    return j;
}

}  // namespace

std::string content_hash(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return hex64(h);
}

std::string emit_hopf(const HopfData& h) {
    json j = envelope(h.field(), "hopf");
    j.update(hopf_body(h));
    return finish(j);
}

std::string emit_comodalg(const ComodAlg& k) {
    json j = envelope(k.hopf.field(), "comodalg");
    j["hopf"] = hopf_body(k.hopf);
    j["alg"] = alg_body(k.alg);
    json c;
    c["side"] = side_str(k.coact.side);
    c["entries"] = tensor_entries(k.coact.coact);
    j["coact"] = c;
    return finish(j);
}

std::string emit_modalg(const ModAlg& r) {
    json j = envelope(r.hopf.field(), "modalg");
    j["hopf"] = hopf_body(r.hopf);
    j["alg"] = alg_body(r.alg);
    json a;
    a["side"] = side_str(r.act.side);
    json arr = json::array();
    for (std::size_t t = 0; t < r.act.action.size(); ++t)
        for (std::size_t x = 0; x < r.act.dim; ++x)
            for (std::size_t y = 0; y < r.act.dim; ++y)
                if (!r.act.action[t].at(x, y).is_zero())
                    arr.push_back(json::array({t, x, y, r.act.action[t].at(x, y).str()}));
    a["entries"] = arr;
    j["act"] = a;
    return finish(j);
}

std::string emit_module(const FieldSpec& f, std::size_t over, const ModuleRep& m) {
    json j = envelope(f, "module");
    j["over"] = over;
    j["dim"] = m.dim;
    j["side"] = side_str(m.side);
    json arr = json::array();
    for (std::size_t t = 0; t < m.action.size(); ++t)
        for (std::size_t x = 0; x < m.dim; ++x)
            for (std::size_t y = 0; y < m.dim; ++y)
                if (!m.action[t].at(x, y).is_zero())
                    arr.push_back(json::array({t, x, y, m.action[t].at(x, y).str()}));
    j["action"] = arr;
    return finish(j);
}

std::string emit_subspace(const Subspace& s) {
    json j = envelope(s.field(), "subspace");
    j["ambient"] = s.ambient_dim();
    j["rows"] = s.dim();
    j["basis"] = matrix_entries(s.basis());
    return finish(j);
}

std::string emit_stabilizer(const StabSpace& st,
                            const std::map<std::string, std::string>& provenance) {
    json j = envelope(st.hopf.field(), "stabilizer");
    j["hopf"] = hopf_body(st.hopf);
    j["chirality"] =
        st.chirality == StabSpace::Chirality::InDualTensor ? "dual-tensor" : "tensor-hopf";
    j["dim_u"] = st.dim_u;
    j["dim_w"] = st.dim_w;
    j["rows"] = st.basis.dim();
    j["basis"] = matrix_entries(st.basis.basis());
    if (!provenance.empty()) {
        json p;
        for (const auto& [k, v] : provenance) p[k] = v;
        j["provenance"] = p;
    }
    return finish(j);
}

std::string emit_report(const Report& r) {
    json j;
    j["schema"] = kSchema;
    j["kind"] = "report";
    j["title"] = r.title;
    json items = json::array();
    for (const auto& it : r.items) {
        json e;
        e["name"] = it.name;
        e["verdict"] = to_string(it.verdict);
        e["witness"] = it.witness;
        items.push_back(e);
    }
    j["items"] = items;
    return finish(j);
}

std::string document_kind(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("document: missing kind");
    return j["kind"].get<std::string>();
}

HopfData parse_hopf(const std::string& text) {
    FieldSpec f;
    json j = parse_envelope(text, "hopf", &f);
    require_keys(j, {"schema", "field", "kind", "dim", "mult", "comult", "unit", "counit",
                     "antipode"},
                 {}, "document");
    json body = j;
    body.erase("schema");
    body.erase("field");
    body.erase("kind");
    return hopf_from(f, body, "hopf");
}

ComodAlg parse_comodalg(const std::string& text) {
    FieldSpec f;
    json j = parse_envelope(text, "comodalg", &f);
    require_keys(j, {"schema", "field", "kind", "hopf", "alg", "coact"}, {}, "document");
    ComodAlg k;
    k.hopf = hopf_from(f, j["hopf"], "hopf");
    k.alg = alg_from(f, j["alg"], "alg");
    require_keys(j["coact"], {"side", "entries"}, {}, "coact");
    k.coact.dim = k.alg.dim;
    k.coact.hopf_dim = k.hopf.dim();
    k.coact.side = side_from(j["coact"]["side"], "coact.side");
    k.coact.coact =
        tensor_from(f, j["coact"]["entries"], k.alg.dim, k.hopf.dim(), k.alg.dim, "coact.entries");
    return k;
}

ModAlg parse_modalg(const std::string& text) {
    FieldSpec f;
    json j = parse_envelope(text, "modalg", &f);
    require_keys(j, {"schema", "field", "kind", "hopf", "alg", "act"}, {}, "document");
    ModAlg r;
    r.hopf = hopf_from(f, j["hopf"], "hopf");
    r.alg = alg_from(f, j["alg"], "alg");
    require_keys(j["act"], {"side", "entries"}, {}, "act");
    r.act.dim = r.alg.dim;
    r.act.side = side_from(j["act"]["side"], "act.side");
    Tensor3 t = tensor_from(f, j["act"]["entries"], r.hopf.dim(), r.alg.dim, r.alg.dim,
                            "act.entries");
    for (std::size_t q = 0; q < r.hopf.dim(); ++q) {
        Matrix m(f, r.alg.dim, r.alg.dim);
        for (std::size_t x = 0; x < r.alg.dim; ++x)
            for (std::size_t y = 0; y < r.alg.dim; ++y) m.at(x, y) = t.at(q, x, y);
        r.act.action.push_back(m);
    }
    return r;
}

ModuleRep parse_module(const std::string& text, FieldSpec* field_out, std::size_t* over_out) {
    FieldSpec f;
    json j = parse_envelope(text, "module", &f);
    require_keys(j, {"schema", "field", "kind", "over", "dim", "side", "action"}, {}, "document");
    std::size_t over = dim_from(j, "over", "document");
    ModuleRep m;
    m.dim = dim_from(j, "dim", "document");
    m.side = side_from(j["side"], "side");
    Tensor3 t = tensor_from(f, j["action"], over, m.dim, m.dim, "action");
    for (std::size_t q = 0; q < over; ++q) {
        Matrix a(f, m.dim, m.dim);
        for (std::size_t x = 0; x < m.dim; ++x)
            for (std::size_t y = 0; y < m.dim; ++y) a.at(x, y) = t.at(q, x, y);
        m.action.push_back(a);
    }
    if (field_out) *field_out = f;
    if (over_out) *over_out = over;
    return m;
}

Subspace parse_subspace(const std::string& text) {
    FieldSpec f;
    json j = parse_envelope(text, "subspace", &f);
    require_keys(j, {"schema", "field", "kind", "ambient", "rows", "basis"}, {}, "document");
    std::size_t amb = dim_from(j, "ambient", "document");
    std::size_t rows = dim_from(j, "rows", "document");
    Matrix m = matrix_from(f, j["basis"], rows, amb, "basis");
    Subspace s = Subspace::span(f, amb, m);
    if (s.dim() != rows) throw ParseError("basis: rows are not independent in echelon form");
    return s;
}

StabSpace parse_stabilizer(const std::string& text,
                           std::map<std::string, std::string>* provenance_out) {
    FieldSpec f;
    json j = parse_envelope(text, "stabilizer", &f);
    require_keys(j, {"schema", "field", "kind", "hopf", "chirality", "dim_u", "dim_w", "rows",
                     "basis"},
                 {"provenance"}, "document");
    StabSpace st;
    st.hopf = hopf_from(f, j["hopf"], "hopf");
    std::string c = j["chirality"].is_string() ? j["chirality"].get<std::string>() : "";
    if (c == "dual-tensor")
        st.chirality = StabSpace::Chirality::InDualTensor;
    else if (c == "tensor-hopf")
        st.chirality = StabSpace::Chirality::InTensorH;
    else
        throw ParseError("chirality: must be \"dual-tensor\" or \"tensor-hopf\"");
    st.dim_u = dim_from(j, "dim_u", "document");
    st.dim_w = dim_from(j, "dim_w", "document");
    std::size_t rows = dim_from(j, "rows", "document");
    Matrix m = matrix_from(f, j["basis"], rows, st.ambient_dim(), "basis");
    st.basis = Subspace::span(f, st.ambient_dim(), m);
    if (st.basis.dim() != rows) throw ParseError("basis: rows are not independent in echelon form");
    if (provenance_out) {
        provenance_out->clear();
        if (j.contains("provenance")) {
            if (!j["provenance"].is_object())
                throw ParseError("provenance: expected an object");
            for (auto it = j["provenance"].begin(); it != j["provenance"].end(); ++it) {
                if (!it.value().is_string())
                    throw ParseError("provenance: hashes must be strings");
                (*provenance_out)[it.key()] = it.value().get<std::string>();
            }
        }
    }
    return st;
}

Report parse_report(const std::string& text) {
    json j = parse_envelope(text, "report", nullptr);
    require_keys(j, {"schema", "kind", "title", "items"}, {}, "document");
    Report r;
    if (!j["title"].is_string()) throw ParseError("title: expected a string");
    r.title = j["title"].get<std::string>();
    if (!j["items"].is_array()) throw ParseError("items: expected an array");
    for (std::size_t p = 0; p < j["items"].size(); ++p) {
        const json& e = j["items"][p];
        require_keys(e, {"name", "verdict", "witness"}, {}, "items entry " + std::to_string(p));
        CheckItem it;
        it.name = e["name"].get<std::string>();
        std::string v = e["verdict"].get<std::string>();
        if (v == "pass")
            it.verdict = Verdict::Pass;
        else if (v == "fail")
            it.verdict = Verdict::Fail;
        else if (v == "undecided")
            it.verdict = Verdict::Undecided;
        else if (v == "hypothesis-unmet")
            it.verdict = Verdict::HypothesisUnmet;
        else
            throw ParseError("items entry " + std::to_string(p) + ": unknown verdict");
        it.witness = e["witness"].get<std::string>();
        r.items.push_back(it);
    }
    return r;
}

void check_stab_provenance(const std::map<std::string, std::string>& recorded,
                           const std::map<std::string, std::string>& actual) {
    for (const auto& [k, v] : recorded) {
        auto it = actual.find(k);
        if (it != actual.end() && it->second != v)
            throw ParseError("provenance mismatch for input \"" + k + "\"");
    }
}

}  // namespace hopfstab
