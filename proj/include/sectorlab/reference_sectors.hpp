#pragma once

#include <array>
#include <string_view>

namespace sectorlab {

/// Bundled reference vocabulary of 60 sector names. Sector files may use any
/// names; this list is advisory and `validate` only reports coverage against
/// it.
inline constexpr std::array<std::string_view, 60> kReferenceSectors = {
    "Advertising",
    "Aerospace defence",
    "Agriculture",
    "Alcoholic beverages",
    "Asset management",
    "Auto manufacturers",
    "Banks - diversified",
    "Biotechnology",
    "Building products & equipment",
    "Capital markets",
    "Casinos",
    "Communications",
    "Computer hardware",
    "Conglomerates",
    "Consumer electronics",
    "Credit",
    "Department stores",
    "Diagnostics research",
    "Discount stores",
    "Drug manufacturers",
    "Electrical equipment",
    "Entertainment",
    "Farming heavy construction",
    "Footwear & accessories",
    "Gambling",
    "Gaming",
    "Gold",
    "Healthcare plans",
    "Home improvement retail",
    "Household",
    "Industrial metals mining",
    "Information technologies",
    "Insurance",
    "Internet",
    "Internet retail",
    "Leisure",
    "Lodging",
    "Medical devices",
    "Medical distribution",
    "Medical instruments supplies",
    "Non-alcoholic beverages",
    "Oil & Gas",
    "Packaged foods",
    "Packaging containers",
    "Publishing",
    "REIT",
    "Railroads",
    "Real estate",
    "Restaurants",
    "Retail",
    "Scientific instruments",
    "Semiconductors",
    "Software applications",
    "Software infrastructure",
    "Special industrial machinery",
    "Specialty chemicals",
    "Telecom",
    "Tobacco",
    "Utilities",
    "Waste management",
};

}  // namespace sectorlab
