#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace kcl {

// Replica-averaged time series of one scalar statistic.
struct DecayCurve {
  std::string statistic;
  std::vector<double> times;
  std::vector<double> values;
  std::vector<double> std_errors;
  int n_replicas = 0;

  std::size_t size() const { return times.size(); }
  void validate() const;
};

// Accumulates per-replica series sampled at common times.
class CurveAccumulator {
 public:
  CurveAccumulator(std::string statistic, std::vector<double> times);
  void add(const std::vector<double>& values);
  DecayCurve finish() const;

 private:
  std::string statistic_;
  std::vector<double> times_;
  std::vector<double> sum_, sumsq_;
  int count_ = 0;
};

}  // namespace kcl
