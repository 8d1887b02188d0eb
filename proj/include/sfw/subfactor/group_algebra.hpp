#pragma once

#include <complex>
#include <map>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "sfw/error.hpp"
#include "sfw/perm/cosets.hpp"
#include "sfw/perm/group.hpp"

namespace sfw {

namespace detail {

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

template <class S>
S conj_scalar(const S& s) {
    if constexpr (is_complex<S>::value)
        return std::conj(s);
    else
        return s;
}

}  // namespace detail

/// Finitely supported Σ c_g u_g in the complex group algebra of G. The
/// scalar type is a template parameter so that rational or integer
/// coefficients give exact arithmetic; zero coefficients are never stored.
template <class Scalar = std::complex<double>>
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(PermGroup g) : group_(std::move(g)) {}

    /// c·u_g
    static GroupAlgebraElement basis(const PermGroup& g, Elem e, Scalar c = Scalar(1)) {
        GroupAlgebraElement x(g);
        x.add_term(e, c);
        return x;
    }
    static GroupAlgebraElement unit(const PermGroup& g) { return basis(g, PermGroup::identity()); }

    const PermGroup& group() const noexcept { return group_; }
    const std::map<Elem, Scalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Scalar coeff(Elem e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add_term(Elem e, const Scalar& c) {
        if (e >= group_.order()) throw InputError("group algebra: element index out of range");
        Scalar& slot = terms_[e];
        slot += c;
        if (slot == Scalar(0)) terms_.erase(e);
    }

    /// tr(x) = coefficient of the identity.
    Scalar trace() const { return coeff(PermGroup::identity()); }

    /// ‖x‖₂² = Σ |c_g|²
    Scalar norm2_squared() const {
        Scalar s(0);
        for (const auto& [e, c] : terms_) s += c * detail::conj_scalar(c);
        return s;
    }

    /// x* = Σ conj(c_g) u_{g^-1}
    GroupAlgebraElement adjoint() const {
        GroupAlgebraElement out(group_);
        for (const auto& [e, c] : terms_) out.add_term(group_.inv(e), detail::conj_scalar(c));
        return out;
    }

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
        require_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o) {
        require_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }

    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        a.require_same(b);
        GroupAlgebraElement out(a.group_);
        for (const auto& [x, cx] : a.terms_)
            for (const auto& [y, cy] : b.terms_) out.add_term(a.group_.mul(x, y), cx * cy);
        return out;
    }
    friend GroupAlgebraElement operator*(const Scalar& s, const GroupAlgebraElement& a) {
        GroupAlgebraElement out(a.group_);
        for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
        return out;
    }

    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.group_ == b.group_ && a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            if (!(c == Scalar(1))) s += scalar_text(c) + "*";
            s += "u" + group_.element(e).to_cycles();
        }
        return s;
    }

private:
    void require_same(const GroupAlgebraElement& o) const {
        if (!(group_ == o.group_)) throw PreconditionError("group algebra: operands live over different groups");
    }
    static std::string scalar_text(const Scalar& c) {
        if constexpr (detail::is_complex<Scalar>::value)
            return "(" + std::to_string(c.real()) + (c.imag() < 0 ? "" : "+") + std::to_string(c.imag()) + "i)";
        else if constexpr (std::is_arithmetic_v<Scalar>)
            return std::to_string(c);
        else
            return "(" + to_string_generic(c) + ")";
    }
    template <class T>
    static std::string to_string_generic(const T& c) {
        std::ostringstream os;
        os << c;
        return os.str();
    }

    PermGroup group_;
    std::map<Elem, Scalar> terms_;
};

/// E_H(x): keeps the coefficients of elements of H. The result is an element
/// of the subalgebra spanned by H inside the algebra of G.
template <class S>
GroupAlgebraElement<S> conditional_expectation(const GroupAlgebraElement<S>& x, const PermGroup& h) {
    PermGroup::require_subgroup(h, x.group());
    GroupAlgebraElement<S> out(x.group());
    for (const auto& [e, c] : x.terms())
        if (h.contains(x.group().element(e))) out.add_term(e, c);
    return out;
}

/// Coefficients (E_H(x u_{g_i}^*))_i over the basis {u_{g_i}} of right
/// coset representatives.
template <class S>
std::vector<GroupAlgebraElement<S>> pimsner_popa_expand(const GroupAlgebraElement<S>& x, const CosetData& cd) {
    if (!(x.group() == cd.group)) throw PreconditionError("expansion: element and cosets over different groups");
    std::vector<GroupAlgebraElement<S>> out;
    out.reserve(cd.index);
    for (std::size_t i = 0; i < cd.index; ++i) {
        auto ui = GroupAlgebraElement<S>::basis(cd.group, cd.rep_elem(i));
        out.push_back(conditional_expectation(x * ui.adjoint(), cd.subgroup));
    }
    return out;
}

/// Σ_i coeffs[i] u_{g_i}
template <class S>
GroupAlgebraElement<S> pimsner_popa_reassemble(const std::vector<GroupAlgebraElement<S>>& coeffs, const CosetData& cd) {
    if (coeffs.size() != cd.index) throw InputError("reassembly: expected one coefficient per coset");
    GroupAlgebraElement<S> x(cd.group);
    for (std::size_t i = 0; i < cd.index; ++i) x += coeffs[i] * GroupAlgebraElement<S>::basis(cd.group, cd.rep_elem(i));
    return x;
}

/// Square matrix with group-algebra entries, row-major.
template <class S>
struct GroupAlgebraMatrix {
    PermGroup group;
    std::size_t n = 0;
    std::vector<GroupAlgebraElement<S>> entries;

    GroupAlgebraMatrix(PermGroup g, std::size_t size)
        : group(g), n(size), entries(size * size, GroupAlgebraElement<S>(g)) {}

    static GroupAlgebraMatrix identity(const PermGroup& g, std::size_t size) {
        GroupAlgebraMatrix m(g, size);
        for (std::size_t i = 0; i < size; ++i) m(i, i) = GroupAlgebraElement<S>::unit(g);
        return m;
    }

    GroupAlgebraElement<S>& operator()(std::size_t i, std::size_t j) { return entries[i * n + j]; }
    const GroupAlgebraElement<S>& operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }

    friend GroupAlgebraMatrix operator*(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b) {
        if (a.n != b.n) throw PreconditionError("matrix size mismatch");
        GroupAlgebraMatrix c(a.group, a.n);
        for (std::size_t i = 0; i < a.n; ++i)
            for (std::size_t k = 0; k < a.n; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < a.n; ++j)
                    if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    /// Entrywise adjoint of the transpose.
    GroupAlgebraMatrix adjoint() const {
        GroupAlgebraMatrix m(group, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(j, i) = (*this)(i, j).adjoint();
        return m;
    }

    friend bool operator==(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b) {
        return a.n == b.n && a.entries == b.entries;
    }
};

}  // namespace sfw
