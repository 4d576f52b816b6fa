#include "molq/json_io.hpp"

namespace molq {

json to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix JSON must be an array of rows");
    std::vector<std::vector<Scalar>> rows;
    for (const json& row : j) {
        if (!row.is_array()) throw std::invalid_argument("matrix row must be an array");
        std::vector<Scalar> r;
        r.reserve(row.size());
        for (const json& cell : row) r.push_back(scalar_from_string(cell.get<std::string>()));
        rows.push_back(std::move(r));
    }
    return Matrix::from_rows(rows);
}

json to_json(const Subspace& s) {
    return {{"ambient", s.ambient()}, {"field", field_name(s.field())}, {"basis", to_json(s.basis())}};
}

Subspace subspace_from_json(const json& j, bool* was_canonical) {
    const int ambient = j.at("ambient").get<int>();
    const Field field = field_from_name(j.at("field").get<std::string>());
    Matrix given = matrix_from_json(j.at("basis"));
    if (given.rows() > 0 && given.cols() != ambient)
        throw std::invalid_argument("basis width does not match ambient dimension");
    Subspace s = Subspace::from_rows(field, ambient, given);
    if (was_canonical) *was_canonical = given == s.basis() || (given.rows() == 0 && s.dim() == 0);
    return s;
}

json to_json(const Frame& f) {
    json a = json::array();
    for (const Subspace& s : f.a) a.push_back(to_json(s));
    return {{"d", f.d}, {"a", std::move(a)}, {"bot", to_json(f.bot)}, {"top", to_json(f.top)}};
}

Frame frame_from_json(const json& j) {
    Frame f;
    f.d = j.at("d").get<int>();
    for (const json& s : j.at("a")) f.a.push_back(subspace_from_json(s));
    f.bot = subspace_from_json(j.at("bot"));
    f.top = subspace_from_json(j.at("top"));
    if (static_cast<int>(f.a.size()) != f.d + 1)
        throw std::invalid_argument("frame needs d+1 components");
    return f;
}

json to_json(const LimitElement& x) {
    return {{"level", x.level}, {"space", to_json(x.space)}};
}

LimitElement limit_from_json(const json& j) {
    return make_limit(j.at("level").get<int>(), subspace_from_json(j.at("space")));
}

json to_json(const TestSet& t) {
    json elements = json::array();
    for (const Subspace& s : t.elements) elements.push_back(to_json(s));
    return {{"ambient", t.lattice.dim},
            {"field", field_name(t.lattice.field)},
            {"elements", std::move(elements)}};
}

TestSet testset_from_json(const json& j) {
    const Lattice lat{field_from_name(j.at("field").get<std::string>()), j.at("ambient").get<int>()};
    std::vector<Subspace> elements;
    for (const json& s : j.at("elements")) elements.push_back(subspace_from_json(s));
    return make_testset(lat, std::move(elements));
}

json to_json(const Substitution& sub) {
    json out = json::object();
    for (const auto& [name, value] : sub) out[name] = to_json(value);
    return out;
}

Substitution substitution_from_json(const json& j) {
    Substitution sub;
    for (const auto& [name, value] : j.items()) sub[name] = subspace_from_json(value);
    return sub;
}

json to_json(const RefutationCertificate& cert) {
    return {{"term", print(cert.tdn.term)},
            {"d", cert.tdn.d},
            {"n", cert.tdn.n},
            {"variables", cert.tdn.vars},
            {"witness", to_json(cert.witness)},
            {"witness_value", to_json(cert.witness_value)},
            {"witness_value_dim", cert.witness_value.dim()},
            {"witness_is_top", cert.witness_value.is_full()},
            {"testset_check",
             {{"holds", cert.testset_check.holds},
              {"substitutions", cert.testset_check.stats.substitutions},
              {"seconds", cert.testset_check.stats.seconds}}}};
}

}  // namespace molq
