#pragma once

// V/H text representations in the cdd-style polyhedral file convention, and
// their JSON counterparts. Rational tokens are exact ("p" or "p/q").

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "types.hpp"

namespace omega {

inline std::string to_text(const VRep& v)
{
    std::ostringstream out;
    out << "V-representation\nbegin\n " << v.points.size() << ' ' << v.dim + 1 << " rational\n";
    for (const auto& p : v.points) {
        out << " 1";
        for (const auto& x : p)
            out << ' ' << to_text(x);
        out << '\n';
    }
    out << "end\n";
    return out.str();
}

/// Rows "b c_1 .. c_d" meaning b + c.x >= 0; equality rows are listed first and named by "linearity".
inline std::string to_text(const HRep& h)
{
    std::ostringstream out;
    out << "H-representation\n";
    if (!h.equalities.empty()) {
        out << "linearity " << h.equalities.size();
        for (std::size_t k = 1; k <= h.equalities.size(); ++k)
            out << ' ' << k;
        out << '\n';
    }
    out << "begin\n " << h.equalities.size() + h.inequalities.size() << ' ' << h.dim + 1 << " rational\n";
    auto row = [&](const LinearForm& f) {
        out << ' ' << to_text(Rational(-f.rhs));
        for (const auto& c : f.coeffs)
            out << ' ' << to_text(c);
        out << '\n';
    };
    for (const auto& f : h.equalities)
        row(f);
    for (const auto& f : h.inequalities)
        row(f);
    out << "end\n";
    return out.str();
}

namespace detail {

struct ParsedMatrix {
    std::string kind;
    std::vector<std::size_t> linearity;  // 1-based rows
    std::size_t cols = 0;
    std::vector<RationalVector> rows;
};

inline ParsedMatrix parse_cdd(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    ParsedMatrix m;
    bool begun = false, ended = false;
    std::size_t expected = 0;
    bool have_counts = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '*')
            continue;
        if (ended)
            continue;
        if (!begun) {
            if (first == "V-representation" || first == "H-representation") {
                m.kind = first;
            } else if (first == "linearity") {
                std::size_t count, idx;
                ls >> count;
                while (ls >> idx)
                    m.linearity.push_back(idx);
                if (m.linearity.size() != count)
                    throw std::invalid_argument("polyhedral text: malformed linearity line");
            } else if (first == "begin") {
                begun = true;
            }
            continue;
        }
        if (!have_counts) {
            std::string number_type;
            std::istringstream cs(line);
            if (!(cs >> expected >> m.cols >> number_type) || m.cols == 0)
                throw std::invalid_argument("polyhedral text: malformed size line '" + line + "'");
            if (number_type != "rational" && number_type != "integer")
                throw std::invalid_argument("polyhedral text: unsupported number type '" + number_type + "'");
            have_counts = true;
            continue;
        }
        if (first == "end") {
            ended = true;
            continue;
        }
        std::istringstream rs(line);
        std::string tok;
        RationalVector row;
        while (rs >> tok)
            row.push_back(parse_rational(tok));
        if (row.size() != m.cols)
            throw std::invalid_argument("polyhedral text: row has " + std::to_string(row.size()) + " entries, expected "
                                        + std::to_string(m.cols));
        m.rows.push_back(std::move(row));
    }
    if (m.kind.empty())
        throw std::invalid_argument("polyhedral text: missing V-/H-representation header");
    if (!ended)
        throw std::invalid_argument("polyhedral text: missing begin/end block");
    if (m.rows.size() != expected)
        throw std::invalid_argument("polyhedral text: declared " + std::to_string(expected) + " rows, found "
                                    + std::to_string(m.rows.size()));
    return m;
}

} // namespace detail

inline bool is_vrep_text(const std::string& text)
{
    return detail::parse_cdd(text).kind == "V-representation";
}

inline VRep parse_vrep(const std::string& text)
{
    auto m = detail::parse_cdd(text);
    if (m.kind != "V-representation")
        throw std::invalid_argument("expected a V-representation");
    VRep v{m.cols - 1, {}};
    for (auto& row : m.rows) {
        if (row[0] != 1)
            throw std::invalid_argument("V-representation rays are not supported; rows must start with 1");
        v.points.emplace_back(row.begin() + 1, row.end());
    }
    return v;
}

inline HRep parse_hrep(const std::string& text)
{
    auto m = detail::parse_cdd(text);
    if (m.kind != "H-representation")
        throw std::invalid_argument("expected an H-representation");
    std::vector<bool> is_eq(m.rows.size(), false);
    for (auto k : m.linearity) {
        if (k < 1 || k > m.rows.size())
            throw std::invalid_argument("linearity index out of range");
        is_eq[k - 1] = true;
    }
    HRep h;
    h.dim = m.cols - 1;
    for (std::size_t k = 0; k < m.rows.size(); ++k) {
        LinearForm f{RationalVector(m.rows[k].begin() + 1, m.rows[k].end()), -m.rows[k][0]};
        (is_eq[k] ? h.equalities : h.inequalities).push_back(std::move(f));
    }
    return h;
}

// JSON forms ----------------------------------------------------------------

inline nlohmann::json rationals_to_json(const RationalVector& v)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : v)
        out.push_back(to_text(x));
    return out;
}

inline RationalVector rationals_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expected an array of rational strings");
    RationalVector out;
    for (const auto& x : j) {
        if (x.is_string())
            out.push_back(parse_rational(x.get<std::string>()));
        else if (x.is_number_integer())
            out.emplace_back(x.get<long long>());
        else
            throw std::invalid_argument("rationals must be \"p/q\" strings or integers");
    }
    return out;
}

inline nlohmann::json form_to_json(const LinearForm& f)
{
    return {{"coeffs", rationals_to_json(f.coeffs)}, {"rhs", to_text(f.rhs)}};
}

inline LinearForm form_from_json(const nlohmann::json& j)
{
    return {rationals_from_json(j.at("coeffs")), parse_rational(j.at("rhs").get<std::string>())};
}

inline nlohmann::json to_json(const VRep& v)
{
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : v.points)
        points.push_back(rationals_to_json(p));
    return {{"kind", "V"}, {"dim", v.dim}, {"points", points}};
}

inline nlohmann::json to_json(const HRep& h)
{
    nlohmann::json ineq = nlohmann::json::array(), eq = nlohmann::json::array();
    for (const auto& f : h.inequalities)
        ineq.push_back(form_to_json(f));
    for (const auto& f : h.equalities)
        eq.push_back(form_to_json(f));
    return {{"kind", "H"}, {"dim", h.dim}, {"inequalities", ineq}, {"equalities", eq}};
}

inline VRep vrep_from_json(const nlohmann::json& j)
{
    VRep v{j.at("dim").get<std::size_t>(), {}};
    for (const auto& p : j.at("points"))
        v.points.push_back(rationals_from_json(p));
    v.validate();
    return v;
}

inline HRep hrep_from_json(const nlohmann::json& j)
{
    HRep h;
    h.dim = j.at("dim").get<std::size_t>();
    for (const auto& f : j.at("inequalities"))
        h.inequalities.push_back(form_from_json(f));
    if (j.contains("equalities"))
        for (const auto& f : j.at("equalities"))
            h.equalities.push_back(form_from_json(f));
    for (const auto* group : {&h.inequalities, &h.equalities})
        for (const auto& f : *group)
            if (f.dim() != h.dim)
                throw std::invalid_argument("H JSON: form length does not match dim");
    return h;
}

} // namespace omega
