#include <overschur/serialize.hpp>

#include <limits>

namespace overschur
{

using nlohmann::json;

void to_json(json &j, const OverPart &p)
{
    j = json{{"value", p.value}, {"overlined", p.overlined}};
}

void from_json(const json &j, OverPart &p)
{
    j.at("value").get_to(p.value);
    j.at("overlined").get_to(p.overlined);
}

void to_json(json &j, const Overpartition &lambda)
{
    j = json(lambda.parts);
}

void from_json(const json &j, Overpartition &lambda)
{
    j.get_to(lambda.parts);
}

void to_json(json &j, const DModularPart &p)
{
    j = json{{"length", p.length}, {"label", std::string(label_name(p.label))}};
}

void from_json(const json &j, DModularPart &p)
{
    j.at("length").get_to(p.length);
    const auto name = j.at("label").get<std::string>();
    const auto label = parse_label(name);
    if (!label) {
        throw json::other_error::create(501, "unknown label \"" + name + "\"", &j);
    }
    p.label = *label;
}

void to_json(json &j, const DModularOverpartition &mu)
{
    j = json(mu.parts);
}

void from_json(const json &j, DModularOverpartition &mu)
{
    j.get_to(mu.parts);
}

void to_json(json &j, const PartitionTriple &t)
{
    j = json{{"alpha", t.alpha}, {"beta", t.beta}, {"gamma", t.gamma}};
}

void from_json(const json &j, PartitionTriple &t)
{
    j.at("alpha").get_to(t.alpha);
    j.at("beta").get_to(t.beta);
    j.at("gamma").get_to(t.gamma);
}

void to_json(json &j, const BoundedTriple &t)
{
    j = json{{"m", t.m}, {"alpha", t.alpha}, {"beta", t.beta}, {"gamma", t.gamma}};
}

void from_json(const json &j, BoundedTriple &t)
{
    j.at("m").get_to(t.m);
    j.at("alpha").get_to(t.alpha);
    j.at("beta").get_to(t.beta);
    j.at("gamma").get_to(t.gamma);
}

json bigint_to_json(const BigInt &v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

void to_json(json &j, const VerificationReport &rep)
{
    j = json{{"identity", std::string(identity_name(rep.identity))},
             {"d", rep.d},
             {"r", rep.r},
             {"order", rep.order},
             {"status", rep.equal ? "equal" : "mismatch"}};
    if (rep.at) {
        j["at"] = *rep.at;
        j["lhs_coeff"] = bigint_to_json(rep.lhs_coeff);
        j["rhs_coeff"] = bigint_to_json(rep.rhs_coeff);
    }
    if (rep.at_m) {
        j["at_m"] = *rep.at_m;
    }
}

} // namespace overschur
