#include <picard/frobenius.hpp>
#include <picard/golden.hpp>
#include <picard/yukawa.hpp>

#include <map>
#include <sstream>

namespace picard {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string join(const std::vector<Rational>& cs)
{
    std::string out;
    for (const auto& c : cs) {
        if (!out.empty()) {
            out += ' ';
        }
        out += to_string(c);
    }
    return out;
}

// Computes each requested source once per suite run.
class SourceCache {
public:
    explicit SourceCache(int order) : order_(order) {}

    PowerSeries get(const std::string& source)
    {
        std::istringstream in(source);
        std::string kind;
        in >> kind;
        if (kind == "mirror") {
            int s = 0;
            std::string which;
            in >> s >> which;
            const auto& m = mirror(s);
            if (which == "q_of_z") {
                return m.q_of_z;
            }
            if (which == "z_of_q") {
                return m.z_of_q;
            }
            if (which == "f0_tilde") {
                return m.f0_tilde;
            }
        } else if (kind == "analytic") {
            int s = 0;
            int j = -1;
            in >> s >> j;
            auto it = analytic_.find(s);
            if (it == analytic_.end()) {
                it = analytic_.emplace(s, frobenius_analytic_parts(s, order_)).first;
            }
            if (j >= 0 && j < static_cast<int>(it->second.size())) {
                return it->second[static_cast<std::size_t>(j)];
            }
        } else if (kind == "yukawa") {
            return yukawa_from_mirror(mirror(5));
        } else if (kind == "instantons") {
            const auto k = yukawa_from_mirror(mirror(5));
            const auto table = instanton_numbers(k, k.order() - 1);
            std::vector<Rational> cs;
            for (const auto& n : table.n) {
                cs.emplace_back(n);
            }
            return PowerSeries(Var::q, 1, std::move(cs), k.order());
        }
        throw PreconditionError("unknown golden source: " + source);
    }

private:
    const MirrorData& mirror(int s)
    {
        auto it = mirrors_.find(s);
        if (it == mirrors_.end()) {
            it = mirrors_.emplace(s, mirror_pipeline(s, order_)).first;
        }
        return it->second;
    }

    int order_;
    std::map<int, MirrorData> mirrors_;
    std::map<int, std::vector<PowerSeries>> analytic_;
};

} // namespace

bool GoldenReport::pass() const
{
    for (const auto& item : items) {
        if (item.status == GoldenStatus::fail) {
            return false;
        }
    }
    return true;
}

const char* to_string(GoldenStatus s)
{
    switch (s) {
    case GoldenStatus::pass:
        return "pass";
    case GoldenStatus::partial:
        return "partial";
    case GoldenStatus::fail:
        return "fail";
    }
    return "?";
}

std::vector<GoldenTable> parse_golden_tables(const std::string& text)
{
    std::vector<GoldenTable> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (line.front() == '[' && line.back() == ']') {
            out.push_back({line.substr(1, line.size() - 2), "", 0, {}});
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos || out.empty()) {
            throw PreconditionError("golden tables: cannot parse line " + std::to_string(lineno));
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        auto& t = out.back();
        if (key == "source") {
            t.source = value;
        } else if (key == "valuation") {
            t.valuation = std::stoi(value);
        } else if (key == "coeffs") {
            std::istringstream cs(value);
            std::string c;
            while (cs >> c) {
                t.coeffs.push_back(parse_rational(c));
            }
        } else {
            throw PreconditionError("golden tables: unknown key '" + key + "' on line " + std::to_string(lineno));
        }
    }
    for (const auto& t : out) {
        if (t.source.empty() || t.coeffs.empty()) {
            throw PreconditionError("golden table " + t.name + " needs a source and coefficients");
        }
    }
    return out;
}

std::vector<GoldenTable> default_golden_tables()
{
    return parse_golden_tables(golden_tables_text());
}

GoldenReport golden_suite(int order)
{
    if (order < 24) {
        throw PreconditionError("golden suite needs order >= 24, got " + std::to_string(order));
    }
    return golden_suite(default_golden_tables(), order);
}

GoldenReport golden_suite(const std::vector<GoldenTable>& tables, int order)
{
    SourceCache cache(order);
    GoldenReport report;
    for (const auto& t : tables) {
        const auto series = cache.get(t.source);
        GoldenItem item;
        item.name = t.name;
        item.listed = static_cast<int>(t.coeffs.size());
        std::vector<Rational> computed;
        for (std::size_t i = 0; i < t.coeffs.size(); ++i) {
            const int e = t.valuation + static_cast<int>(i);
            if (e >= series.order()) {
                break;
            }
            computed.push_back(series.coeff(e));
            ++item.checked;
            if (!item.first_mismatch && computed.back() != t.coeffs[i]) {
                item.first_mismatch = e;
            }
        }
        // a nonzero term below the table's first exponent is also a mismatch
        if (!item.first_mismatch && series.valuation() < t.valuation) {
            item.first_mismatch = series.valuation();
        }
        if (item.first_mismatch) {
            item.status = GoldenStatus::fail;
        } else if (item.checked < item.listed) {
            item.status = GoldenStatus::partial;
        }
        item.expected = join(t.coeffs);
        item.computed = join(computed);
        report.items.push_back(std::move(item));
    }
    return report;
}

} // namespace picard
