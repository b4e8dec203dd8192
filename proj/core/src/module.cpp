#include "cellres/module.hpp"

#include <sstream>

namespace cellres {

GradedFreeModule::GradedFreeModule(Ring ring, std::vector<Generator> gens)
    : ring_(std::move(ring)) {
    for (auto& g : gens) add_generator(std::move(g.id), std::move(g.degree));
}

int GradedFreeModule::index_of(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

void GradedFreeModule::add_generator(std::string id, Exponent degree) {
    if (degree.size() != ring_.nvars())
        throw DimensionError("generator degree length does not match ring");
    if (!is_nonnegative(degree))
        throw std::invalid_argument("generator degree has negative entry");
    if (index_.count(id))
        throw std::invalid_argument("duplicate generator id '" + id + "'");
    index_.emplace(id, static_cast<int>(gens_.size()));
    gens_.push_back({std::move(id), std::move(degree)});
}

GradedMatrix::GradedMatrix(GradedFreeModule target, GradedFreeModule source)
    : target_(std::move(target)), source_(std::move(source)) {
    if (target_.ring() != source_.ring())
        throw DimensionError("matrix source and target over different rings");
}

GradedMatrix GradedMatrix::identity(const GradedFreeModule& m) {
    GradedMatrix r(m, m);
    for (std::size_t i = 0; i < m.rank(); ++i)
        r.set_entry(i, i, Polynomial::constant(Rational(1), m.ring().nvars()));
    return r;
}

const Polynomial& GradedMatrix::entry(std::size_t r, std::size_t c) const {
    static const Polynomial kZero;
    auto it = entries_.find({r, c});
    return it == entries_.end() ? kZero : it->second;
}

void GradedMatrix::set_entry(std::size_t r, std::size_t c, Polynomial p) {
    if (r >= rows() || c >= cols()) throw DimensionError("matrix entry out of range");
    if (p.is_zero())
        entries_.erase({r, c});
    else
        entries_[{r, c}] = std::move(p);
}

void GradedMatrix::add_to_entry(std::size_t r, std::size_t c, const Polynomial& p) {
    if (p.is_zero()) return;
    Polynomial q = entry(r, c) + p;
    set_entry(r, c, std::move(q));
}

bool GradedMatrix::operator==(const GradedMatrix& o) const {
    return target_ == o.target_ && source_ == o.source_ && entries_ == o.entries_;
}

GradedMatrix GradedMatrix::operator+(const GradedMatrix& o) const {
    if (source_ != o.source_ || target_ != o.target_)
        throw DimensionError("matrix sum shape mismatch");
    GradedMatrix r = *this;
    for (const auto& [pos, p] : o.entries_) r.add_to_entry(pos.first, pos.second, p);
    return r;
}

GradedMatrix GradedMatrix::operator-(const GradedMatrix& o) const {
    return *this + (-o);
}

GradedMatrix GradedMatrix::operator-() const {
    GradedMatrix r(target_, source_);
    for (const auto& [pos, p] : entries_) r.entries_.emplace(pos, -p);
    return r;
}

GradedMatrix GradedMatrix::times_scalar(const Rational& c) const {
    GradedMatrix r(target_, source_);
    if (c == 0) return r;
    for (const auto& [pos, p] : entries_) r.entries_.emplace(pos, p.times_scalar(c));
    return r;
}

std::optional<std::pair<std::size_t, std::size_t>> GradedMatrix::homogeneity_failure(
    const Exponent& shift) const {
    for (const auto& [pos, p] : entries_) {
        Exponent want = sub_exp(add_exp(source_.degree(pos.second), shift),
                                target_.degree(pos.first));
        if (!p.is_single_term() || p.sole_exponent() != want) return pos;
    }
    return std::nullopt;
}

bool GradedMatrix::has_unit_entry() const {
    for (const auto& [pos, p] : entries_)
        if (p.has_unit_term()) return true;
    return false;
}

std::string GradedMatrix::to_string() const {
    std::ostringstream out;
    const Ring& ring = source_.ring();
    for (std::size_t r = 0; r < rows(); ++r) {
        out << "[";
        for (std::size_t c = 0; c < cols(); ++c) {
            if (c) out << ", ";
            out << entry(r, c).to_string(ring);
        }
        out << "]\n";
    }
    return out.str();
}

GradedMatrix matrix_compose(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.source() != b.target())
        throw DimensionError("matrix composition: inner modules differ");
    GradedMatrix r(a.target(), b.source());
    // Sparse product: group b's entries by row to meet a's column index.
    for (const auto& [posA, pa] : a.entries()) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            const Polynomial& pb = b.entry(posA.second, c);
            if (pb.is_zero()) continue;
            r.add_to_entry(posA.first, c, pa * pb);
        }
    }
    return r;
}

GradedMatrix submatrix(const GradedMatrix& m, const std::vector<std::size_t>& row_idx,
                       const std::vector<std::size_t>& col_idx,
                       const GradedFreeModule& target, const GradedFreeModule& source) {
    GradedMatrix r(target, source);
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j) {
            const Polynomial& p = m.entry(row_idx[i], col_idx[j]);
            if (!p.is_zero()) r.set_entry(i, j, p);
        }
    return r;
}

}  // namespace cellres
