#include "specseq/subquotient.hpp"

#include "specseq/normal_form.hpp"

#include <sstream>
#include <stdexcept>

namespace specseq {

std::string GroupStructure::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << " ⊕ ";
        first = false;
    };
    if (free_rank == 1) {
        sep();
        os << "Z";
    } else if (free_rank > 1) {
        sep();
        os << "Z^" << free_rank;
    }
    for (const Int& f : torsion) {
        sep();
        os << "Z/" << f.get_str();
    }
    return os.str();
}

Subquotient subquotient(const Lattice& num, const Lattice& den) {
    if (num.ambient_rank() != den.ambient_rank()) throw std::invalid_argument("ambient rank mismatch");
    std::size_t a = num.rank();
    std::size_t b = den.rank();
    IntMatrix c(a, b);
    for (std::size_t j = 0; j < b; ++j) {
        auto cc = coords(num, den.basis().col(j));
        if (!cc) throw std::invalid_argument("denominator not contained in numerator");
        c.set_col(j, *cc);
    }
    SmithForm f = snf(c);

    Subquotient q;
    q.num_ = num;
    q.den_ = den;
    q.proj_ = f.u;
    for (std::size_t i = b; i < a; ++i) q.free_idx_.push_back(i);
    for (std::size_t i = 0; i < b; ++i)
        if (f.d(i, i) >= 2) q.tors_idx_.push_back(i);
    q.structure_.free_rank = q.free_idx_.size();
    for (std::size_t i : q.tors_idx_) q.structure_.torsion.push_back(f.d(i, i));

    auto ambient_rep = [&](std::size_t i) {
        IntVec in_num = f.u_inv.col(i);
        IntVec v(num.ambient_rank());
        for (std::size_t r = 0; r < num.ambient_rank(); ++r)
            for (std::size_t k = 0; k < a; ++k)
                if (in_num[k] != 0) v[r] += num.basis()(r, k) * in_num[k];
        return v;
    };
    for (std::size_t i : q.free_idx_) q.gens_.push_back(ambient_rep(i));
    for (std::size_t i : q.tors_idx_) q.gens_.push_back(ambient_rep(i));
    return q;
}

IntVec Subquotient::class_coords(const IntVec& ambient_vector) const {
    auto c = coords(num_, ambient_vector);
    if (!c) throw std::invalid_argument("vector not in numerator");
    IntVec y = proj_ * *c;
    IntVec out;
    out.reserve(generator_count());
    for (std::size_t i : free_idx_) out.push_back(y[i]);
    for (std::size_t k = 0; k < tors_idx_.size(); ++k) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), y[tors_idx_[k]].get_mpz_t(), structure_.torsion[k].get_mpz_t());
        out.push_back(r);
    }
    return out;
}

IntVec Subquotient::reduce(const IntVec& generator_coords) const {
    if (generator_coords.size() != generator_count())
        throw std::invalid_argument("generator coordinate size mismatch");
    IntVec out = generator_coords;
    for (std::size_t k = 0; k < structure_.torsion.size(); ++k) {
        Int& slot = out[structure_.free_rank + k];
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), slot.get_mpz_t(), structure_.torsion[k].get_mpz_t());
        slot = r;
    }
    return out;
}

bool Subquotient::is_zero_class(const IntVec& ambient_vector) const {
    return is_zero(class_coords(ambient_vector));
}

InducedMap induce(const IntMatrix& f, const Subquotient& dom, const Subquotient& cod) {
    if (f.cols() != dom.ambient_rank() || f.rows() != cod.ambient_rank())
        throw std::invalid_argument("induced map shape mismatch");
    InducedMap out;
    out.domain = dom;
    out.codomain = cod;
    for (std::size_t j = 0; j < dom.numerator().rank(); ++j) {
        IntVec w = f * dom.numerator().basis().col(j);
        if (!contains(cod.numerator(), w)) {
            out.offending_image = w;
            return out;
        }
    }
    for (std::size_t j = 0; j < dom.denominator().rank(); ++j) {
        IntVec w = f * dom.denominator().basis().col(j);
        if (!contains(cod.denominator(), w)) {
            out.offending_image = w;
            return out;
        }
    }
    out.well_defined = true;
    out.matrix = IntMatrix(cod.generator_count(), dom.generator_count());
    for (std::size_t j = 0; j < dom.generator_count(); ++j)
        out.matrix.set_col(j, cod.class_coords(f * dom.generators()[j]));
    return out;
}

IntMatrix relation_matrix(const Subquotient& q) {
    IntMatrix r(q.generator_count(), q.torsion().size());
    for (std::size_t k = 0; k < q.torsion().size(); ++k) r(q.free_rank() + k, k) = q.torsion()[k];
    return r;
}

Lattice hom_kernel(const IntMatrix& m, const Subquotient& codomain) {
    if (m.rows() != codomain.generator_count()) throw std::invalid_argument("hom_kernel shape mismatch");
    IntMatrix rel = relation_matrix(codomain);
    Lattice k = kernel_basis(m.hstack(rel));
    std::vector<std::size_t> top(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) top[i] = i;
    return Lattice::from_columns(m.cols(), k.basis().row_subset(top));
}

Lattice hom_image(const IntMatrix& m, const Subquotient& codomain) {
    if (m.rows() != codomain.generator_count()) throw std::invalid_argument("hom_image shape mismatch");
    return lattice_sum(image_basis(m), image_basis(relation_matrix(codomain)));
}

}  // namespace specseq
