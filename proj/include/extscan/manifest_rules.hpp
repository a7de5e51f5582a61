#pragma once

#include "extscan/package.hpp"
#include "extscan/policy.hpp"

#include <vector>

namespace extscan {

// Findings derivable from the manifest alone. Total function; output is
// sorted by rule id then location.
std::vector<Finding> analyze_manifest(const ExtensionManifest& manifest, const Policy& policy);

// Findings derivable from the file inventory: oversized packages, bundled
// binaries/archives, bundled node_modules.
std::vector<Finding> analyze_inventory(const ExtensionIdentity& subject,
                                       const PackageInventory& inventory, const Policy& policy);

} // namespace extscan
