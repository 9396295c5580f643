#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace relhom {

inline void check(bool cond, const std::string& msg)
{
    if (!cond)
        throw std::invalid_argument(msg);
}

enum class DomainKind { Rationals, PrimeField, Integers };

/// One of the three coefficient domains: Q, F_p (p prime), Z.
/// All arithmetic in the engine is exact; there is no floating point anywhere.
struct ScalarDomain {
    DomainKind kind = DomainKind::Rationals;
    unsigned long p = 0;  // modulus, PrimeField only

    static ScalarDomain rationals() { return {DomainKind::Rationals, 0}; }
    static ScalarDomain integers() { return {DomainKind::Integers, 0}; }
    static ScalarDomain prime_field(unsigned long p);

    bool is_field() const { return kind != DomainKind::Integers; }
    bool operator==(const ScalarDomain&) const = default;

    std::string str() const;
};

// Canonical representatives: Q entries are reduced fractions with positive
// denominator (mpq_class invariant), F_p entries are integers in [0, p),
// Z entries have denominator 1.  Equality of canonical values is structural.
mpq_class s_canon(const ScalarDomain& dom, const mpq_class& v);
bool s_in_domain(const ScalarDomain& dom, const mpq_class& v);

mpq_class s_add(const ScalarDomain& dom, const mpq_class& a, const mpq_class& b);
mpq_class s_sub(const ScalarDomain& dom, const mpq_class& a, const mpq_class& b);
mpq_class s_mul(const ScalarDomain& dom, const mpq_class& a, const mpq_class& b);
mpq_class s_neg(const ScalarDomain& dom, const mpq_class& a);
mpq_class s_inv(const ScalarDomain& dom, const mpq_class& a);  // fields only, a != 0
mpq_class s_div(const ScalarDomain& dom, const mpq_class& a, const mpq_class& b);

std::string s_str(const mpq_class& v);
mpq_class s_parse(const std::string& text);  // "a" or "a/b"

}  // namespace relhom
