#include "casimir/quantities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace casimir {

namespace {

// CODATA 2018
constexpr double kHbar = 1.054571817e-34;        // J s
constexpr double kSpeedOfLight = 299792458.0;    // m/s
constexpr double kPlanckLength = 1.616255e-35;   // m

constexpr double kCasimirCoefficient = std::numbers::pi / 24.0;

} // namespace

Constants make_constants(ConstantsProfile profile) {
    Constants k{};
    k.hbar = kHbar;
    k.planck_length = kPlanckLength;
    k.casimir_coefficient = kCasimirCoefficient;
    k.profile = profile;
    switch (profile) {
    case ConstantsProfile::Codata:
        k.c = kSpeedOfLight;
        k.profile_name = "codata";
        break;
    case ConstantsProfile::PaperRounded:
        k.c = 1.0e8;
        k.profile_name = "paper";
        break;
    }
    k.planck_time = k.planck_length / k.c;
    k.planck_energy = k.hbar * k.c / k.planck_length;
    return k;
}

ConstantsProfile parse_profile(std::string_view name) {
    if (name == "codata") return ConstantsProfile::Codata;
    if (name == "paper" || name == "paper-rounded") return ConstantsProfile::PaperRounded;
    throw std::domain_error("unknown constants profile: " + std::string(name));
}

double mode_scale_l(double lateral_extension, const Constants& k) {
    if (!(lateral_extension > 0.0))
        throw std::domain_error("lateral extension must be positive");
    if (k.profile == ConstantsProfile::PaperRounded)
        return lateral_extension / 7.0;
    return std::sqrt(k.casimir_coefficient / (2.0 * std::numbers::pi)) * lateral_extension;
}

} // namespace casimir
