#include "sdnopt/oracle.hpp"

namespace sdnopt {

namespace {

class glr_batch final : public drawn_batch {
 public:
  glr_batch(const glr_model& model, sample_batch batch)
      : model_(model), batch_(std::move(batch)) {}
  Eigen::VectorXd eval(const Eigen::VectorXd& x) const override {
    return stoch_grad(model_, batch_, x);
  }
  int size() const override { return batch_.size(); }

 private:
  const glr_model& model_;
  sample_batch batch_;
};

class exact_batch final : public drawn_batch {
 public:
  exact_batch(const exact_oracle::grad_fn& g, int m) : grad_(g), m_(m) {}
  Eigen::VectorXd eval(const Eigen::VectorXd& x) const override { return grad_(x); }
  int size() const override { return m_; }

 private:
  const exact_oracle::grad_fn& grad_;
  int m_;
};

}  // namespace

std::unique_ptr<drawn_batch> glr_oracle::draw(rng_stream& rng, int m) {
  record_draw(m);
  return std::make_unique<glr_batch>(model_, draw_batch(model_, m, rng));
}

std::unique_ptr<drawn_batch> exact_oracle::draw(rng_stream& /*rng*/, int m) {
  record_draw(m);
  return std::make_unique<exact_batch>(grad_, m);
}

}  // namespace sdnopt
