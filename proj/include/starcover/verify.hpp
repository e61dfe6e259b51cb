#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starcover/cover.hpp"
#include "starcover/graph.hpp"

namespace starcover {

/// An S3-cover Y -> X with its intermediate quotients Q = Y/C3 and
/// T = Y/C2.
struct S3Family {
    GaloisCover cover;
    Graph Q;
    Graph T;

    const Graph& Y() const { return cover.cover.total; }
    const Graph& X() const { return cover.cover.base; }
};

/// C2 is generated by `c2_generator` (an element index of the cover's
/// group) or, by default, by its first element of order 2. Throws
/// std::invalid_argument unless the group is isomorphic to S3.
S3Family make_s3_family(GaloisCover cover, std::optional<int> c2_generator = std::nullopt);

/// X3 over K4, with C2 = <(1,2)>.
S3Family star_family();

/// The normal Klein four-group <(1,2)(3,4), (1,3)(2,4)> inside S5.
PermutationGroup klein_normal();

/// X4 / V over K5.
S3Family klein_family();

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    bool pass() const;
};

std::vector<std::string> suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string_view name);

}  // namespace starcover
