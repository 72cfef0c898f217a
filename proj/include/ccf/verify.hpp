// Exhaustive verification sweeps: every structural identity the library is
// built on, checked over bounded ranges of fractions and words.  The CLI
// verify command and the acceptance suite both drive this.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccf/ancestor.hpp"

namespace ccf {

struct VerifyOptions {
    std::int64_t max_q = 100; // main fraction sweep bound
    int max_len = 12;         // main word sweep bound
    std::uint64_t path_cap = kDefaultPathCap;
    // Test hook: flips the -A^4 coefficient inside the recursion-linearity
    // check so that the harness can confirm a mutation is caught.
    bool inject_phi_sign_bug = false;
};

struct VerifyItem {
    std::string name;
    bool pass = false;
    std::string detail; // counts on success, first failure otherwise
    double millis = 0.0;
};

struct VerifyReport {
    std::vector<VerifyItem> items;

    bool all_pass() const;
    std::string summary() const; // one line per item plus totals
};

VerifyReport run_verification(const VerifyOptions& options);

} // namespace ccf
