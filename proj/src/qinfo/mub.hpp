#ifndef QINFO_MUB_HPP
#define QINFO_MUB_HPP

#include <string>
#include <vector>

#include "qinfo/matkernel.hpp"

namespace qinfo {

// A family of dim+1 orthonormal bases of C^dim, one basis per matrix with the
// basis vectors as columns. Construction fixes vector order and global phases
// canonically (first nonzero component real positive), so equal inputs always
// produce identical bytes.
class MubSet {
public:
    // Shape check only; unbiasedness is the verifier's business, and tests
    // need to be able to build deliberately broken sets.
    static MubSet from_bases(int dim, std::vector<ComplexMatrix> bases);

    int dim() const { return dim_; }
    const std::vector<ComplexMatrix>& bases() const { return bases_; }
    const ComplexMatrix& basis(int index) const { return bases_[static_cast<size_t>(index)]; }

    // Every basis rotated by the same unitary; preserves verifier errors.
    MubSet conjugated(const ComplexMatrix& u) const;

private:
    MubSet(int dim, std::vector<ComplexMatrix> bases) : dim_(dim), bases_(std::move(bases)) {}
    int dim_ = 0;
    std::vector<ComplexMatrix> bases_;
};

// Complete set of n+1 mutually unbiased bases. Supported n: 2, 3, 4, 5, 7, 8, 9.
// n = 6 is rejected: no complete set is known there and existence is an open
// problem. Other n are rejected as outside the supported prime-power list.
MubSet mub_construct(int n);

struct MubVerification {
    double orthonormality_error; // max |B^H B - I| entry over all bases
    double unbiasedness_error;   // max | |<e^a_j|e^b_k>|^2 - 1/n | over distinct bases
};

MubVerification verify_mub(const MubSet& set);

// JSON: {"dim":n,"bases":[{"re":..,"im":..},...],"max_orthonormality_error":..,
//        "max_unbiasedness_error":..}
std::string mub_to_json(const MubSet& set, const MubVerification& verification);

// Independent real parameters of a density operator in dimension n, split by
// the coprime prime-power factors q_i of n: q_i^2-1 locally per factor, the
// rest in correlations, n^2-1 in total.
struct ParamCount {
    std::vector<int> factors;             // prime powers, ascending prime
    std::vector<long long> local_params;  // q_i^2 - 1
    long long correlation_params = 0;     // total minus the locals; 0 for one factor
    long long total = 0;                  // n^2 - 1
};

ParamCount param_count_decomposition(int n);

} // namespace qinfo

#endif
