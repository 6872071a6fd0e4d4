#include <aa/forms.hpp>

#include <sstream>
#include <stdexcept>

namespace aa {

LinearForm LinearForm::variable(int idx, Rat coeff) {
    LinearForm f;
    f.set_coeff(idx, std::move(coeff));
    return f;
}

Rat LinearForm::coeff(int idx) const {
    auto it = coeffs.find(idx);
    return it == coeffs.end() ? Rat(0) : it->second;
}

void LinearForm::set_coeff(int idx, Rat value) {
    if (value == 0)
        coeffs.erase(idx);
    else
        coeffs[idx] = std::move(value);
}

Rat LinearForm::evaluate(const std::vector<Rat>& point) const {
    Rat out = constant;
    for (const auto& [i, c] : coeffs) {
        if (i < 0 || i >= static_cast<int>(point.size()))
            throw std::out_of_range("evaluation point too short");
        out += c * point[i];
    }
    return out;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    constant += o.constant;
    for (const auto& [i, c] : o.coeffs) set_coeff(i, coeff(i) + c);
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
    constant -= o.constant;
    for (const auto& [i, c] : o.coeffs) set_coeff(i, coeff(i) - c);
    return *this;
}

LinearForm& LinearForm::operator*=(const Rat& t) {
    if (t == 0) {
        constant = 0;
        coeffs.clear();
        return *this;
    }
    constant *= t;
    for (auto& [i, c] : coeffs) c *= t;
    return *this;
}

std::vector<Rat> LinearForm::dense(int dim) const {
    std::vector<Rat> out(dim, Rat(0));
    for (const auto& [i, c] : coeffs) {
        if (i >= dim) throw std::out_of_range("form index beyond dimension");
        out[i] = c;
    }
    return out;
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Rat& c, const std::string& var) {
    if (c == 0) return;
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
        if (c < 0) os << "-";
        first = false;
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (var.empty()) {
        os << to_string(a);
    } else {
        if (a != 1) os << to_string(a) << "*";
        os << var;
    }
}

} // namespace

std::string LinearForm::str() const {
    std::ostringstream os;
    bool first = true;
    append_term(os, first, constant, "");
    for (const auto& [i, c] : coeffs) append_term(os, first, c, "x" + std::to_string(i + 1));
    if (first) os << "0";
    return os.str();
}

Rat QuadraticForm::evaluate(const std::vector<Rat>& point) const {
    Rat out = constant;
    for (const auto& [i, c] : linear) out += c * point.at(i);
    for (const auto& [ij, c] : quadratic) out += c * point.at(ij.first) * point.at(ij.second);
    return out;
}

std::array<Rat, 3> QuadraticForm::along_ray(const std::vector<Rat>& dir) const {
    Rat c1 = 0, c2 = 0;
    for (const auto& [i, c] : linear) c1 += c * dir.at(i);
    for (const auto& [ij, c] : quadratic) c2 += c * dir.at(ij.first) * dir.at(ij.second);
    return {constant, c1, c2};
}

QuadraticForm& QuadraticForm::operator+=(const QuadraticForm& o) {
    constant += o.constant;
    for (const auto& [i, c] : o.linear) {
        Rat n = (linear.count(i) ? linear[i] : Rat(0)) + c;
        if (n == 0) linear.erase(i); else linear[i] = n;
    }
    for (const auto& [ij, c] : o.quadratic) {
        Rat n = (quadratic.count(ij) ? quadratic[ij] : Rat(0)) + c;
        if (n == 0) quadratic.erase(ij); else quadratic[ij] = n;
    }
    return *this;
}

QuadraticForm& QuadraticForm::operator-=(const QuadraticForm& o) {
    QuadraticForm neg = o;
    neg *= Rat(-1);
    return *this += neg;
}

QuadraticForm& QuadraticForm::operator*=(const Rat& t) {
    if (t == 0) {
        constant = 0;
        linear.clear();
        quadratic.clear();
        return *this;
    }
    constant *= t;
    for (auto& [i, c] : linear) c *= t;
    for (auto& [ij, c] : quadratic) c *= t;
    return *this;
}

void QuadraticForm::add_linear(const LinearForm& f, const Rat& scale) {
    constant += scale * f.constant;
    for (const auto& [i, c] : f.coeffs) {
        Rat n = (linear.count(i) ? linear[i] : Rat(0)) + scale * c;
        if (n == 0) linear.erase(i); else linear[i] = n;
    }
}

std::string QuadraticForm::str() const {
    std::ostringstream os;
    bool first = true;
    append_term(os, first, constant, "");
    for (const auto& [i, c] : linear) append_term(os, first, c, "x" + std::to_string(i + 1));
    for (const auto& [ij, c] : quadratic) {
        std::string var = "x" + std::to_string(ij.first + 1);
        if (ij.second == ij.first)
            var += "^2";
        else
            var += "*x" + std::to_string(ij.second + 1);
        append_term(os, first, c, var);
    }
    if (first) os << "0";
    return os.str();
}

QuadraticForm mul(const LinearForm& a, const LinearForm& b) {
    QuadraticForm q;
    q.constant = a.constant * b.constant;
    auto bump = [&q](int i, const Rat& d) {
        Rat n = (q.linear.count(i) ? q.linear[i] : Rat(0)) + d;
        if (n == 0) q.linear.erase(i); else q.linear[i] = n;
    };
    for (const auto& [i, c] : b.coeffs) bump(i, a.constant * c);
    for (const auto& [i, c] : a.coeffs) bump(i, b.constant * c);
    for (const auto& [i, ci] : a.coeffs)
        for (const auto& [j, cj] : b.coeffs) {
            auto key = i <= j ? std::make_pair(i, j) : std::make_pair(j, i);
            Rat n = (q.quadratic.count(key) ? q.quadratic[key] : Rat(0)) + ci * cj;
            if (n == 0) q.quadratic.erase(key); else q.quadratic[key] = n;
        }
    return q;
}

int AngleVector::beta(int i) const {
    if (i < 1 || i > r) throw std::out_of_range("beta index");
    return i - 1;
}

int AngleVector::eta(int i) const {
    if (i == 0) return beta(r);
    if (i < 0 || i > h) throw std::out_of_range("eta index");
    return r + i - 1;
}

int AngleVector::nu(int j) const {
    if (j == 0) return beta(1);
    if (j < 0 || j > v) throw std::out_of_range("nu index");
    return r + h + j - 1;
}

std::string AngleVector::name(int idx) const {
    if (idx < 0 || idx >= count()) throw std::out_of_range("angle index");
    if (idx < r) return "beta" + std::to_string(idx + 1);
    if (idx < r + h) return "eta" + std::to_string(idx - r + 1);
    return "nu" + std::to_string(idx - r - h + 1);
}

std::string AngleVector::alias(int idx) const {
    if (idx < 0 || idx >= count()) throw std::out_of_range("angle index");
    if (idx < r) return name(idx);
    if (idx < r + h) return "delta" + std::to_string(idx - r + 1);
    return "gamma" + std::to_string(idx - r - h + 1);
}

} // namespace aa
