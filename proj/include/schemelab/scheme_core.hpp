#pragma once
// Association schemes over a finite ground set: axioms A1-A4, structure
// constants, contractions, wreath products and the first eigenmatrix.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schemelab/matkit.hpp"

namespace schemelab {

// Square 0/1 matrix packed 64 columns per word.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  explicit BinaryMatrix(std::size_t n);

  static BinaryMatrix identity(std::size_t n);
  static BinaryMatrix from_rat(const RatMatrix& m);  // throws unless 0/1

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }
  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + (j >> 6)] >> (j & 63)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool v = true);
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
  std::uint64_t* row(std::size_t i) { return bits_.data() + i * words_; }

  std::size_t row_count(std::size_t i) const;
  std::size_t count() const;
  std::optional<std::pair<std::size_t, std::size_t>> first_one() const;

  BinaryMatrix transpose() const;
  bool is_symmetric() const { return *this == transpose(); }
  RatMatrix to_rat() const;
  DenseMatrix to_dense() const;
  BinaryMatrix& operator|=(const BinaryMatrix& o);

  friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Integer product counts (A B)[i][j], row-major.
std::vector<std::int64_t> count_product(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryMatrix kron(const BinaryMatrix& a, const BinaryMatrix& b);

class AssociationScheme {
 public:
  AssociationScheme() = default;
  AssociationScheme(std::vector<BinaryMatrix> associates, std::vector<std::string> labels = {});

  std::size_t ground_size() const { return ground_; }
  std::size_t class_count() const { return associates_.size(); }
  const BinaryMatrix& associate(std::size_t i) const { return associates_.at(i); }
  const std::vector<BinaryMatrix>& associates() const { return associates_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Class index of every pair; empty unless the associates partition J.
  const std::vector<std::uint16_t>& relation() const { return relation_; }
  bool partitions_ones() const { return !relation_.empty() || ground_ == 0; }

 private:
  std::size_t ground_ = 0;
  std::vector<BinaryMatrix> associates_;
  std::vector<std::string> labels_;
  std::vector<std::uint16_t> relation_;
};

// Anything that can report the class of each ordered pair of ground points.
class RelationOracle {
 public:
  virtual ~RelationOracle() = default;
  virtual std::size_t ground_size() const = 0;
  virtual std::size_t class_count() const = 0;
  // out[b] = class of (a, b) for every b.
  virtual void relation_row(std::size_t a, std::vector<int>& out) const = 0;
  // which = 0 or 1; two distinct pairs of class k when the class has two.
  virtual std::optional<std::pair<std::size_t, std::size_t>> representative(int k,
                                                                            int which) const = 0;
};

class SchemeOracle final : public RelationOracle {
 public:
  explicit SchemeOracle(const AssociationScheme& s);
  std::size_t ground_size() const override { return s_.ground_size(); }
  std::size_t class_count() const override { return s_.class_count(); }
  void relation_row(std::size_t a, std::vector<int>& out) const override;
  std::optional<std::pair<std::size_t, std::size_t>> representative(int k,
                                                                    int which) const override;

 private:
  const AssociationScheme& s_;
};

// p[i][j][k] = number of z with (x,z) in class i and (z,y) in class j for (x,y) in class k.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t d) : d_(d), p_(d * d * d, 0) {}
  std::size_t classes() const { return d_; }
  std::int64_t& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return p_[(i * d_ + j) * d_ + k];
  }
  std::int64_t operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return p_[(i * d_ + j) * d_ + k];
  }
  std::vector<int> transpose;      // transpose[i] = index of A_i^T
  std::vector<std::int64_t> valency;  // p[i][i'][0]

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.d_ == b.d_ && a.p_ == b.p_ && a.transpose == b.transpose;
  }

 private:
  std::size_t d_ = 0;
  std::vector<std::int64_t> p_;
};

// Representative-pair computation, cross-validated on a second pair of each
// class. Throws std::runtime_error naming the class when the two disagree.
StructureConstants structure_constants(const RelationOracle& oracle);
StructureConstants structure_constants(const AssociationScheme& s);

struct AxiomReport {
  bool a1 = false;  // associate 0 is the identity
  bool a2 = false;  // closed under transpose
  bool a3 = false;  // associates partition J
  bool a4 = false;  // products lie in the span
  std::string a4_mode;  // "entrywise" or "representative" or "skipped"
  std::optional<std::string> witness;
  std::vector<int> transpose;
  bool ok() const { return a1 && a2 && a3 && a4; }
};

struct AxiomOptions {
  // Entrywise A4 check while classes^2 * n^2 * words stays under this.
  double entrywise_budget = 4e9;
};

AxiomReport verify_axioms(const AssociationScheme& s, const AxiomOptions& opts = {});

bool is_commutative(const StructureConstants& sc);
bool is_symmetric(const StructureConstants& sc);
bool is_symmetric(const AssociationScheme& s);

// Blocks of non-identity class indices; the identity stays alone as block 0.
using ClassPartition = std::vector<std::vector<int>>;

// Throws std::invalid_argument unless the blocks cover 1..d-1 exactly once.
void validate_partition(const ClassPartition& blocks, std::size_t classes);

struct ContractionResult {
  AssociationScheme scheme;
  AxiomReport report;
};
ContractionResult contract(const AssociationScheme& s, const ClassPartition& blocks);

struct ContractionCheck {
  bool transpose_closed = false;  // A2 for the merged classes
  bool symmetric = false;         // every block closed under transpose
  bool closed = false;            // A4 for the merged classes
  std::optional<std::string> witness;
  std::optional<StructureConstants> constants;  // when closed
  bool is_subscheme() const { return transpose_closed && closed; }
};
// Same question answered from the parent's structure constants alone.
ContractionCheck check_contraction(const StructureConstants& sc, const ClassPartition& blocks);

// Both factors symmetric. Classes: I (x) A2_i for every i, then A1_i (x) J for i >= 1.
AssociationScheme wreath(const AssociationScheme& a1, const AssociationScheme& a2);

struct PMatrix {
  // rows[j][i] = eigenvalue of associate i on eigenspace j; row 0 is the trivial one.
  std::vector<std::vector<double>> rows;
  std::vector<int> multiplicities;
  std::optional<std::vector<std::vector<Rational>>> exact;
  int attempts = 0;
};

// Symmetric schemes only; throws std::invalid_argument otherwise and
// std::runtime_error when no generic combination separates the eigenspaces.
PMatrix p_matrix(const AssociationScheme& s);

// Matches numeric rows to exact candidate rows; true when every row pairs up.
bool attach_exact(PMatrix& pm, const std::vector<std::vector<Rational>>& candidates,
                  double tol = 1e-6);

nlohmann::ordered_json to_json(const AxiomReport& r);
nlohmann::ordered_json to_json(const StructureConstants& sc);
nlohmann::ordered_json to_json(const PMatrix& pm);

}  // namespace schemelab
