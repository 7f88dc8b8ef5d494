#include "pfq/skewpf.hpp"

namespace pfq {

IndexSet::IndexSet(std::vector<int> idx) : v_(std::move(idx)) {
  for (size_t k = 1; k < v_.size(); ++k)
    if (v_[k] <= v_[k - 1]) throw DomainError("index set not strictly increasing: " + str());
}

IndexSet IndexSet::range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return IndexSet(std::move(v));
}

IndexSet IndexSet::with(std::initializer_list<int> extra) const {
  std::vector<int> v = v_;
  v.insert(v.end(), extra.begin(), extra.end());
  return IndexSet(std::move(v));
}

std::string IndexSet::str() const {
  std::string s = "{";
  for (size_t k = 0; k < v_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(v_[k]);
  }
  return s + "}";
}

}  // namespace pfq
