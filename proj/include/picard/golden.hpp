#ifndef PICARD_GOLDEN_HPP
#define PICARD_GOLDEN_HPP

#include <picard/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace picard {

/// One transcribed coefficient table.
///   source "mirror <s> <q_of_z|z_of_q|f0_tilde>", "analytic <s> <j>",
///   "yukawa" or "instantons"; coeffs[i] belongs to exponent valuation + i.
struct GoldenTable {
    std::string name;
    std::string source;
    int valuation = 0;
    std::vector<Rational> coeffs;
};

enum class GoldenStatus { pass, partial, fail };

struct GoldenItem {
    std::string name;
    GoldenStatus status = GoldenStatus::pass;
    int checked = 0; // coefficients compared
    int listed = 0;  // coefficients in the table
    std::optional<int> first_mismatch; // exponent
    std::string expected;
    std::string computed;
};

struct GoldenReport {
    std::vector<GoldenItem> items;
    bool pass() const;
};

/// Text asset format: blank lines and '#' comments ignored;
///   [name]
///   source = ...
///   valuation = n
///   coeffs = c0 c1 ...
std::vector<GoldenTable> parse_golden_tables(const std::string& text);
const std::string& golden_tables_text();
std::vector<GoldenTable> default_golden_tables();

const char* to_string(GoldenStatus s);

/// Requires order >= 24. Tables longer than the computed series are
/// compared on the available prefix and reported as partial.
GoldenReport golden_suite(int order);
GoldenReport golden_suite(const std::vector<GoldenTable>& tables, int order);

} // namespace picard

#endif // PICARD_GOLDEN_HPP
