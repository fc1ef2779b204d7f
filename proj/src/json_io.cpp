#include "effalg/json_io.hpp"

namespace effalg {

namespace {

const Json& field(const Json& doc, const char* name)
{
    if (!doc.is_object() || !doc.contains(name))
        throw InputError(std::string("missing field \"") + name + "\"");
    return doc.at(name);
}

std::size_t index_from_json(const Json& value, const char* what)
{
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0)
        throw InputError(std::string(what) + " must be a nonnegative integer");
    return value.get<std::size_t>();
}

int int_from_json(const Json& value, const char* what)
{
    if (!value.is_number_integer())
        throw InputError(std::string(what) + " must be an integer");
    return value.get<int>();
}

Json indices(const std::vector<Index>& v)
{
    Json out = Json::array();
    for (auto i : v)
        out.push_back(i);
    return out;
}

template <std::size_t N>
Json optional_indices(const std::optional<std::array<Index, N>>& w)
{
    if (!w)
        return nullptr;
    return indices(std::vector<Index>(w->begin(), w->end()));
}

Json optional_pair(const std::optional<std::pair<Index, Index>>& w)
{
    if (!w)
        return nullptr;
    return Json::array({w->first, w->second});
}

} // namespace

Json to_json(const Rational& value)
{
    return to_string(value);
}

Json to_json(const RationalVector& values)
{
    Json out = Json::array();
    for (const auto& v : values)
        out.push_back(to_json(v));
    return out;
}

Rational rational_from_json(const Json& value)
{
    if (value.is_string()) {
        try {
            return parse_rational(value.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    if (value.is_number_integer())
        return Rational(value.get<long>());
    throw InputError("rationals must be strings \"p/q\" or integers");
}

RationalVector rational_vector_from_json(const Json& value)
{
    if (!value.is_array())
        throw InputError("expected an array of rationals");
    RationalVector out;
    for (const auto& v : value)
        out.push_back(rational_from_json(v));
    return out;
}

RawSumTable table_from_json(const Json& doc)
{
    RawSumTable t;
    t.n = index_from_json(field(doc, "n"), "n");
    if (t.n == 0)
        throw InputError("n must be positive");
    if (doc.contains("zero") && index_from_json(doc.at("zero"), "zero") != 0)
        throw InputError("zero must be element 0");
    if (doc.contains("one") && index_from_json(doc.at("one"), "one") != t.n - 1)
        throw InputError("one must be element n-1");
    const auto& sums = field(doc, "sums");
    if (!sums.is_array())
        throw InputError("sums must be an array of [i, j, k] triples");
    for (const auto& s : sums) {
        if (!s.is_array() || s.size() != 3)
            throw InputError("sums must be an array of [i, j, k] triples");
        t.sums.push_back({index_from_json(s[0], "sum index"), index_from_json(s[1], "sum index"),
            index_from_json(s[2], "sum index")});
    }
    if (doc.contains("labels")) {
        const auto& labels = doc.at("labels");
        if (!labels.is_array() || labels.size() != t.n)
            throw InputError("labels must be an array of n strings");
        for (const auto& l : labels) {
            if (!l.is_string())
                throw InputError("labels must be strings");
            t.labels.push_back(l.get<std::string>());
        }
    }
    return t;
}

CatalogSpec catalog_from_json(const Json& doc)
{
    const auto kind = field(doc, "kind");
    if (!kind.is_string())
        throw InputError("catalog kind must be a string");
    const auto k = kind.get<std::string>();
    if (k == "boolean")
        return CatalogSpec::boolean(int_from_json(field(doc, "k"), "k"));
    if (k == "chain")
        return CatalogSpec::chain(int_from_json(field(doc, "n"), "n"));
    if (k == "even_subsets")
        return CatalogSpec::even_subsets(int_from_json(field(doc, "m"), "m"));
    if (k == "mv_product") {
        std::vector<int> chains;
        for (const auto& c : field(doc, "chains"))
            chains.push_back(int_from_json(c, "chain length"));
        return CatalogSpec::mv_product(std::move(chains));
    }
    if (k == "product") {
        std::vector<CatalogSpec> factors;
        for (const auto& f : field(doc, "factors"))
            factors.push_back(catalog_from_json(f));
        return CatalogSpec::product(std::move(factors));
    }
    throw InputError("unknown catalog kind \"" + k + "\"");
}

Json to_json(const CatalogSpec& spec)
{
    switch (spec.kind) {
    case CatalogKind::Boolean:
        return {{"kind", "boolean"}, {"k", spec.parameter}};
    case CatalogKind::Chain:
        return {{"kind", "chain"}, {"n", spec.parameter}};
    case CatalogKind::EvenSubsets:
        return {{"kind", "even_subsets"}, {"m", spec.parameter}};
    case CatalogKind::MvProduct:
        return {{"kind", "mv_product"}, {"chains", spec.chains}};
    case CatalogKind::Product: {
        Json factors = Json::array();
        for (const auto& f : spec.factors)
            factors.push_back(to_json(f));
        return {{"kind", "product"}, {"factors", factors}};
    }
    }
    return nullptr;
}

IntervalAlgebra group_from_json(const Json& doc)
{
    PoGroupSpec spec;
    spec.rank = index_from_json(field(doc, "rank"), "rank");
    const auto scalars = field(doc, "scalars").get<std::string>();
    if (scalars == "Z")
        spec.scalars = Scalars::Integers;
    else if (scalars == "Q")
        spec.scalars = Scalars::Rationals;
    else
        throw InputError("scalars must be \"Z\" or \"Q\"");
    const auto order = field(doc, "order").get<std::string>();
    if (order == "product")
        spec.order = GroupOrder::Product;
    else if (order == "lex")
        spec.order = GroupOrder::Lex;
    else if (order == "strict")
        spec.order = GroupOrder::Strict;
    else
        throw InputError("order must be \"product\", \"lex\" or \"strict\"");
    try {
        return IntervalAlgebra(spec, rational_vector_from_json(field(doc, "unit")));
    } catch (const InputError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

StructureInput structure_from_json(const Json& doc)
{
    StructureInput in;
    if (!doc.is_object())
        throw InputError("structure file must be a JSON object");
    if (doc.contains("catalog"))
        in.catalog = catalog_from_json(doc.at("catalog"));
    else if (doc.contains("group"))
        in.group = group_from_json(doc.at("group"));
    else
        in.table = table_from_json(doc);
    return in;
}

Json structure_to_json(const FiniteEffectAlgebra& algebra)
{
    Json sums = Json::array();
    for (const auto& t : algebra.sum_triples())
        sums.push_back(Json::array({t.a, t.b, t.c}));
    return {{"n", algebra.size()}, {"zero", algebra.zero()}, {"one", algebra.one()}, {"sums", sums},
        {"labels", algebra.labels()}};
}

SimplexInput simplex_from_json(const Json& doc)
{
    SimplexInput in;
    const auto& vertices = field(doc, "vertices");
    if (!vertices.is_array() || vertices.empty())
        throw InputError("vertices must be a nonempty array of names");
    for (const auto& v : vertices)
        in.simplex.labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    for (const auto& j : field(doc, "g")) {
        auto image = index_from_json(j, "g entry");
        if (image >= in.simplex.size())
            throw InputError("g sends a vertex outside the simplex");
        in.g.images.push_back(image);
    }
    if (in.g.images.size() != in.simplex.size())
        throw InputError("g must list one image per vertex");
    in.g.n = doc.contains("n") ? int_from_json(doc.at("n"), "n") : 2;
    if (in.g.n < 1)
        throw InputError("n must be positive");
    return in;
}

Json to_json(const AxiomViolation& v)
{
    return {{"axiom", to_string(v.axiom)}, {"witness", indices(v.witness)}, {"message", v.message}};
}

Json to_json(const StructureReport& r, const std::vector<Ideal>& ideals)
{
    Json ideal_list = Json::array();
    for (const auto& i : ideals) {
        Json entry{{"members", indices(i.elements())}, {"riesz", i.riesz}};
        if (i.tau_ideal)
            entry["tau_ideal"] = *i.tau_ideal;
        ideal_list.push_back(entry);
    }
    return {
        {"rdp", {{"holds", r.rdp.holds}, {"witness", optional_indices(r.rdp.witness)},
                    {"splitting_holds", r.rdp.splitting_holds},
                    {"splitting_witness", optional_indices(r.rdp.splitting_witness)}}},
        {"interpolation",
            {{"holds", r.interpolation.holds}, {"witness", optional_indices(r.interpolation.witness)}}},
        {"lattice", {{"class", to_string(r.lattice.lattice_class)},
                        {"missing_bound", optional_indices(r.lattice.missing_bound)},
                        {"incomparable_bound", optional_indices(r.lattice.incomparable_bound)}}},
        {"ideal_count", r.ideal_count},
        {"riesz_ideal_count", r.riesz_ideal_count},
        {"ideals", ideal_list},
    };
}

Json to_json(const Classification& c)
{
    return {
        {"endomorphism", c.endomorphism},
        {"potencies", c.potencies},
        {"minimal_potency", c.minimal_potency ? Json(*c.minimal_potency) : Json(nullptr)},
        {"state_operator", c.state_operator},
        {"strong", c.strong},
        {"state_morphism", c.state_morphism},
        {"preserves_joins", c.preserves_joins},
        {"preserves_meets", c.preserves_meets},
        {"faithful", c.faithful},
        {"kernel", indices(c.kernel)},
    };
}

Json to_json(const InducedStateMap& g)
{
    auto vm = g.vertex_map();
    return {
        {"n", g.n},
        {"vertex_map", vm ? Json(*vm) : Json(nullptr)},
        {"images_are_states", g.images_are_states},
        {"n_potent_on_vertices", g.n_potent_on_vertices},
        {"affine_on_probes", g.affine_on_probes},
        {"value_sets_included", g.value_sets_included},
        {"probes", g.probes},
        {"ok", g.ok()},
        {"failure", g.failure},
    };
}

Json to_json(const OrderDeterminingReport& r)
{
    return {{"order_determining", r.order_determining}, {"order_witness", optional_pair(r.order_witness)},
        {"separating", r.separating}, {"separating_witness", optional_pair(r.separating_witness)}};
}

Json to_json(const RoundTripReport& r)
{
    return {{"ok", r.ok}, {"failure", r.failure},
        {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)}, {"points_checked", r.points_checked},
        {"functions_checked", r.functions_checked}};
}

Json to_json(const MorphismReport& r)
{
    return {{"ok", r.ok}, {"law", r.law}, {"witness", r.witness ? Json(*r.witness) : Json(nullptr)}};
}

Json to_json(const SuiteCheck& c)
{
    return {{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}};
}

} // namespace effalg
