#include "hetnet/monomial.hpp"

#include <cmath>
#include <sstream>

namespace hetnet {

std::vector<int> CrossSection::active_labels() const {
    std::vector<int> labels;
    labels.reserve(dim - 1);
    for (int m = 1; m <= dim; ++m)
        if (m != neighbor) labels.push_back(m);
    return labels;
}

int CrossSection::active_index(int label) const {
    if (label < 1 || label > dim || label == neighbor)
        throw std::out_of_range("label not active on this section");
    return label - 1 - (label > neighbor ? 1 : 0);
}

std::string to_string(const CrossSection& s) {
    std::ostringstream os;
    os << "H_" << s.node << "^{" << (s.orient == Orientation::In ? "in" : "out") << ","
       << s.neighbor << "}";
    return os.str();
}

bool sections_identified(const CrossSection& from, const CrossSection& to) {
    return from.dim == to.dim && from.orient == Orientation::Out &&
           to.orient == Orientation::In && from.neighbor == to.node &&
           to.neighbor == from.node;
}

SectionMismatch::SectionMismatch(const CrossSection& got, const CrossSection& want)
    : std::runtime_error("section mismatch: got " + to_string(got) + ", expected " +
                         to_string(want)) {}

MonomialMap MonomialMap::identity(const CrossSection& s) {
    return {s, s, RatMatrix::identity(s.dim - 1)};
}

MonomialMap MonomialMap::identification(const CrossSection& from, const CrossSection& to) {
    if (!sections_identified(from, to)) throw SectionMismatch(from, to);
    RatMatrix p(to.dim - 1, from.dim - 1);
    for (int label : to.active_labels()) {
        // the source radial x_i is carried to the target coordinate x_j
        int src = (label == to.radial_label()) ? from.radial_label() : label;
        p(to.active_index(label), from.active_index(src)) = 1;
    }
    return {from, to, std::move(p)};
}

const Rational& MonomialMap::exponent(int out_label, int in_label) const {
    return E(codomain.active_index(out_label), domain.active_index(in_label));
}

MonomialMap local_map(const NodeSpectrum& eq, int from, int to) {
    const int i = eq.node, n = eq.dim;
    if (from == to || from == i || to == i) throw std::invalid_argument("degenerate connection");
    if (eq.at(to) <= 0) throw NonPositiveExpanding();
    if (eq.at(from) >= 0)
        throw std::invalid_argument("incoming eigenvalue must be contracting (negative)");
    const Rational& e_out = eq.at(to);

    CrossSection dom{i, Orientation::In, from, n};
    CrossSection cod{i, Orientation::Out, to, n};
    RatMatrix E(n - 1, n - 1);
    for (int m : cod.active_labels()) {
        const int r = cod.active_index(m);
        if (m != from) E(r, dom.active_index(m)) = 1;
        E(r, dom.active_index(to)) += -eq.at(m) / e_out;
    }
    return {dom, cod, std::move(E)};
}

MonomialMap compose(const MonomialMap& second, const MonomialMap& first) {
    if (first.codomain == second.domain)
        return {first.domain, second.codomain, second.E * first.E};
    if (sections_identified(first.codomain, second.domain)) {
        auto link = MonomialMap::identification(first.codomain, second.domain);
        return {first.domain, second.codomain, second.E * (link.E * first.E)};
    }
    throw SectionMismatch(first.codomain, second.domain);
}

MonomialMap compose(const std::vector<MonomialMap>& maps) {
    if (maps.empty()) throw std::invalid_argument("compose of empty list");
    MonomialMap acc = maps.front();
    for (std::size_t k = 1; k < maps.size(); ++k) acc = compose(maps[k], acc);
    return acc;
}

MonomialMap close_loop(const MonomialMap& m) {
    if (m.domain == m.codomain) return m;
    if (sections_identified(m.codomain, m.domain))
        return {m.domain, m.domain,
                MonomialMap::identification(m.codomain, m.domain).E * m.E};
    throw SectionMismatch(m.codomain, m.domain);
}

MonomialMap iterate(const MonomialMap& m, unsigned long n) {
    if (n == 0) throw std::invalid_argument("iterate requires n >= 1");
    MonomialMap e = close_loop(m);
    return {e.domain, e.codomain, e.E.pow(n)};
}

MonomialMap inverse(const MonomialMap& m) {
    return {m.codomain, m.domain, m.E.inverse()};
}

std::vector<double> evaluate(const MonomialMap& m, const std::vector<double>& x) {
    std::vector<double> u(x.size());
    for (std::size_t l = 0; l < x.size(); ++l) {
        if (!(x[l] > 0)) throw NonPositiveInput();
        u[l] = std::log(x[l]);
    }
    auto v = evaluate_log(m, u);
    for (double& y : v) y = std::exp(y);
    return v;
}

template <typename T>
static std::vector<T> apply_log(const MonomialMap& m, const std::vector<T>& u) {
    if (u.size() != m.E.cols()) throw std::invalid_argument("point dimension mismatch");
    std::vector<T> v(m.E.rows(), T(0));
    for (std::size_t r = 0; r < m.E.rows(); ++r)
        for (std::size_t c = 0; c < m.E.cols(); ++c)
            if (m.E(r, c) != 0) {
                if constexpr (std::is_same_v<T, double>)
                    v[r] += to_double(m.E(r, c)) * u[c];
                else
                    v[r] += m.E(r, c) * u[c];
            }
    return v;
}

std::vector<double> evaluate_log(const MonomialMap& m, const std::vector<double>& u) {
    return apply_log(m, u);
}
std::vector<Rational> evaluate_log(const MonomialMap& m, const std::vector<Rational>& u) {
    return apply_log(m, u);
}

bool has_integer_exponents(const MonomialMap& m) {
    for (std::size_t r = 0; r < m.E.rows(); ++r)
        for (std::size_t c = 0; c < m.E.cols(); ++c)
            if (denominator(m.E(r, c)) != 1) return false;
    return true;
}

std::vector<Rational> evaluate_exact(const MonomialMap& m, const std::vector<Rational>& x) {
    if (!has_integer_exponents(m))
        throw std::domain_error("exact evaluation needs integer exponents");
    if (x.size() != m.E.cols()) throw std::invalid_argument("point dimension mismatch");
    for (const auto& v : x)
        if (v <= 0) throw NonPositiveInput();
    std::vector<Rational> y(m.E.rows(), Rational(1));
    for (std::size_t r = 0; r < m.E.rows(); ++r)
        for (std::size_t c = 0; c < m.E.cols(); ++c)
            if (m.E(r, c) != 0) {
                const BigInt& k = numerator(m.E(r, c));
                if (k > 100000 || k < -100000)
                    throw std::domain_error("exponent too large for exact evaluation");
                y[r] *= rational_pow(x[c], k.convert_to<long>());
            }
    return y;
}

RelevantBlock relevant_block(const MonomialMap& m) {
    RelevantBlock b;
    for (int l : m.codomain.active_labels())
        if (l != m.codomain.radial_label()) b.row_labels.push_back(l);
    for (int l : m.domain.active_labels())
        if (l != m.domain.radial_label()) b.col_labels.push_back(l);
    b.E = RatMatrix(b.row_labels.size(), b.col_labels.size());
    const int rad_col = m.domain.active_index(m.domain.radial_label());
    for (std::size_t r = 0; r < b.row_labels.size(); ++r) {
        const int row = m.codomain.active_index(b.row_labels[r]);
        if (m.E(row, rad_col) != 0)
            throw std::logic_error("radial input feeds a non-radial output; projection invalid");
        for (std::size_t c = 0; c < b.col_labels.size(); ++c)
            b.E(r, c) = m.E(row, m.domain.active_index(b.col_labels[c]));
    }
    return b;
}

static std::string section_line(const char* tag, const CrossSection& s) {
    std::ostringstream os;
    os << tag << " " << s.node << " " << (s.orient == Orientation::In ? "in" : "out") << " "
       << s.neighbor << " " << s.dim;
    return os.str();
}

std::string serialize(const MonomialMap& m) {
    std::ostringstream os;
    os << "monomial-map v1\n";
    os << section_line("domain", m.domain) << "\n";
    os << section_line("codomain", m.codomain) << "\n";
    for (std::size_t r = 0; r < m.E.rows(); ++r) {
        os << "row";
        for (std::size_t c = 0; c < m.E.cols(); ++c) os << " " << to_string(m.E(r, c));
        os << "\n";
    }
    return os.str();
}

static CrossSection parse_section(std::istringstream& is) {
    CrossSection s;
    std::string orient;
    if (!(is >> s.node >> orient >> s.neighbor >> s.dim) || (orient != "in" && orient != "out"))
        throw std::invalid_argument("bad section line in serialized map");
    s.orient = orient == "in" ? Orientation::In : Orientation::Out;
    return s;
}

MonomialMap deserialize_map(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "monomial-map v1")
        throw std::invalid_argument("not a serialized monomial map");
    MonomialMap m;
    std::vector<std::vector<Rational>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream is(line);
        std::string tag;
        is >> tag;
        if (tag == "domain") m.domain = parse_section(is);
        else if (tag == "codomain") m.codomain = parse_section(is);
        else if (tag == "row") {
            std::vector<Rational> row;
            std::string tok;
            while (is >> tok) row.push_back(parse_rational(tok));
            rows.push_back(std::move(row));
        } else {
            throw std::invalid_argument("unknown line in serialized map: " + tag);
        }
    }
    const std::size_t nr = rows.size();
    const std::size_t nc = nr ? rows.front().size() : 0;
    m.E = RatMatrix(nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
        if (rows[r].size() != nc) throw std::invalid_argument("ragged exponent rows");
        for (std::size_t c = 0; c < nc; ++c) m.E(r, c) = rows[r][c];
    }
    if (m.E.rows() != static_cast<std::size_t>(m.codomain.dim - 1) ||
        m.E.cols() != static_cast<std::size_t>(m.domain.dim - 1))
        throw std::invalid_argument("exponent matrix shape does not match sections");
    return m;
}

}  // namespace hetnet
