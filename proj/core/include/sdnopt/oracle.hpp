#pragma once

#include <cstdint>
#include <functional>
#include <memory>

#include <Eigen/Core>

#include "sdnopt/glr.hpp"
#include "sdnopt/rng.hpp"

namespace sdnopt {

// One drawn mini-batch, evaluable at any number of query points (SGE needs
// the same samples at two consecutive iterates).
class drawn_batch {
 public:
  virtual ~drawn_batch() = default;
  virtual Eigen::VectorXd eval(const Eigen::VectorXd& x) const = 0;
  virtual int size() const = 0;
};

// Stochastic first-order oracle. Keeps its own count of drawn observations
// so the harness can cross-check the trajectories' bookkeeping.
class gradient_oracle {
 public:
  virtual ~gradient_oracle() = default;
  virtual std::unique_ptr<drawn_batch> draw(rng_stream& rng, int m) = 0;
  std::int64_t observations_drawn() const { return drawn_; }

 protected:
  void record_draw(int m) { drawn_ += m; }

 private:
  std::int64_t drawn_ = 0;
};

// Mini-batch GLR oracle; batches are materialized and replayable.
class glr_oracle final : public gradient_oracle {
 public:
  explicit glr_oracle(glr_model model) : model_(std::move(model)) {
    model_.validate();
  }
  const glr_model& model() const { return model_; }
  std::unique_ptr<drawn_batch> draw(rng_stream& rng, int m) override;

 private:
  glr_model model_;
};

// Deterministic oracle returning the exact gradient of a supplied map;
// draws are counted like any other oracle so call accounting stays uniform.
class exact_oracle final : public gradient_oracle {
 public:
  using grad_fn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
  explicit exact_oracle(grad_fn g) : grad_(std::move(g)) {}
  std::unique_ptr<drawn_batch> draw(rng_stream& rng, int m) override;

 private:
  grad_fn grad_;
};

}  // namespace sdnopt
