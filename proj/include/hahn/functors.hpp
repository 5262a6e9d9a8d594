#pragma once

#include "hahn/basic.hpp"

namespace hahn {

enum class Functor { dual, tensor, hom, tor, ext };

// D(U/V) = V°/U°, extended additively. An involution on multibasics.
Multibasic dual(const Multibasic& m);

// M ⊗ N via L0L1 / (L0N1 + N0L1) on presentations, extended bilinearly.
Multibasic tensor(const Multibasic& m, const Multibasic& n);

// Hom(M, N) via ((L1:L0) ∩ (N1:N0)) / (N1:L0), extended bi-additively.
Multibasic hom(const Multibasic& m, const Multibasic& n);

// Tor(M, N) via (N0L1 ∩ L0N1) / N0N1, extended bilinearly.
Multibasic tor(const Multibasic& m, const Multibasic& n);

// Ext(M, N) via (L1:N0) / ((L1:L0) + (N1:N0)), extended bi-additively.
Multibasic ext(const Multibasic& m, const Multibasic& n);

// Tor_i and Ext^i vanish identically for i >= 2 (global dimension reasons);
// lower degrees are rejected: use tensor/hom for 0 and tor/ext for 1.
Multibasic higher(Functor f, int degree, const Multibasic& m, const Multibasic& n);

// Single-summand versions; nullopt is the zero module.
std::optional<StandardBasic> dual_basic(const StandardBasic& b);
std::optional<StandardBasic> tensor_basic(const StandardBasic& a, const StandardBasic& b);
std::optional<StandardBasic> hom_basic(const StandardBasic& a, const StandardBasic& b);
std::optional<StandardBasic> tor_basic(const StandardBasic& a, const StandardBasic& b);
std::optional<StandardBasic> ext_basic(const StandardBasic& a, const StandardBasic& b);

std::string functor_name(Functor f);

} // namespace hahn
