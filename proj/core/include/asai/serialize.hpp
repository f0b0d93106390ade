#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "asai/arch.hpp"
#include "asai/asai_nonarch.hpp"
#include "asai/characters.hpp"
#include "asai/factor.hpp"
#include "asai/padic.hpp"

namespace asai {

using json = nlohmann::json;

// Malformed input; pointer is a JSON pointer to the offending field.
class InputError : public std::invalid_argument {
public:
    InputError(std::string pointer, const std::string& message)
        : std::invalid_argument(message + " at " + (pointer.empty() ? std::string("/") : pointer)),
          pointer(std::move(pointer)),
          message(message) {}
    std::string pointer;
    std::string message;
};

struct Rational {
    i64 num = 1;
    i64 den = 1;
};

json to_json(cplx z);
json to_json(const Angle& a);
json to_json(const Rational& r);
json to_json(const LocalField& K);
// "field" is "F" when chi lives on the ground field, "E" otherwise.
json to_json(const MultChar& chi);
json to_json(const NonArchFactor& f);
json to_json(const ArchFactor& f);
json to_json(const CChar& chi);
json to_json(const Comparison& c);
json grid_to_json(const std::vector<cplx>& grid);

// Readers take the JSON pointer of the value they parse, for error messages.
cplx cplx_from_json(const json& j, const std::string& ptr);
Angle angle_from_json(const json& j, const std::string& ptr);
Rational rational_from_json(const json& j, const std::string& ptr);
// {"p": 5} is Q_5; "ext" selects a quadratic extension; "precision" overrides the default.
LocalField field_from_json(const json& j, const std::string& ptr);
// K is the field of the problem: characters tagged "F" live on K.base(), "E" on K.
// Strings "trivial" and "omega" (the quadratic character of K/F) are accepted as shorthands.
MultChar character_from_json(const json& j, const LocalField& K, const std::string& ptr);
NonArchFactor nonarch_factor_from_json(const json& j, const std::string& ptr);
ArchFactor arch_factor_from_json(const json& j, const std::string& ptr);
CChar cchar_from_json(const json& j, const std::string& ptr);
std::vector<cplx> grid_from_json(const json& j, const std::string& ptr);

// Parses text as JSON; a bare word such as trivial is read as a string.
json parse_argument(const std::string& text, const std::string& ptr);

// [{"s": [re, im], "value": [re, im]}, ...]
template <class Factor>
json eval_table(const Factor& f, const std::vector<cplx>& grid) {
    json rows = json::array();
    for (cplx s : grid) rows.push_back({{"s", to_json(s)}, {"value", to_json(f.eval(s))}});
    return rows;
}

// Input of the tate command.
struct TateBundle {
    LocalField K = LocalField::ground(3);
    MultChar chi;
    int psi_shift = 0;  // psi(x) = psi_0(p^shift x)

    AddChar psi() const;
};

json to_json(const TateBundle& b);
TateBundle tate_bundle_from_json(const json& j, const std::string& ptr);

// Input of the asai, twisted-asai and dichotomy commands.
struct AsaiBundle {
    LocalField E = LocalField::quadratic(3, ExtType::unramified);
    MultChar mu;
    MultChar nu;
    int psi_shift = 0;      // psi(x) = psi_0(p^shift x) on F
    Rational xi_scale{};    // xi = xi_scale * xi_canonical
    std::optional<MultChar> chi;
    std::optional<TauData> tau;
    RepKind kind = RepKind::principal_series;

    AsaiInput input() const;
};

json to_json(const AsaiBundle& b);
AsaiBundle asai_bundle_from_json(const json& j, const std::string& ptr);

json to_json(const Normalization& n);

}  // namespace asai
