#include "hx/tensorexpr.hpp"

#include <algorithm>

namespace hx {

Tensor Tensor::of_vec(const Vec& v) {
  Tensor t(v.field(), {v.dim()});
  for (auto& [i, c] : v.entries()) t.ent_.emplace(std::vector<int>{i}, c);
  return t;
}

Tensor Tensor::scalar(const Field& f, const Scalar& c) {
  Tensor t(f, {});
  if (!c.is_zero()) t.ent_.emplace(std::vector<int>{}, c);
  return t;
}

void Tensor::put(std::vector<int> key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = ent_.emplace(std::move(key), c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) ent_.erase(it);
  }
}

Tensor Tensor::apply(const LinMap& f, const std::vector<int>& legs_in, int at) const {
  long dd = 1;
  for (int l : legs_in) dd *= dims_[l];
  if (dd != f.dom()) throw std::runtime_error("tensor apply: domain mismatch");
  std::vector<bool> used(dims_.size(), false);
  for (int l : legs_in) used[l] = true;
  std::vector<int> keep;
  for (int i = 0; i < (int)dims_.size(); ++i)
    if (!used[i]) keep.push_back(i);

  std::vector<int> ndims;
  for (int i = 0; i < (int)keep.size(); ++i) {
    if (i == at) ndims.push_back(f.cod());
    ndims.push_back(dims_[keep[i]]);
  }
  if (at == (int)keep.size()) ndims.push_back(f.cod());
  Tensor out(f_, ndims);

  for (auto& [key, c] : ent_) {
    long idx = 0;
    for (int l : legs_in) idx = idx * dims_[l] + key[l];
    const Vec& img = f.column((int)idx);
    for (auto& [k, d] : img.entries()) {
      std::vector<int> nkey;
      nkey.reserve(ndims.size());
      for (int i = 0; i < (int)keep.size(); ++i) {
        if (i == at) nkey.push_back(k);
        nkey.push_back(key[keep[i]]);
      }
      if (at == (int)keep.size()) nkey.push_back(k);
      out.put(std::move(nkey), c * d);
    }
  }
  return out;
}

Tensor Tensor::split(int leg, int d1, int d2) const {
  if (dims_[leg] != d1 * d2) throw std::runtime_error("tensor split: dimension mismatch");
  std::vector<int> ndims = dims_;
  ndims[leg] = d1;
  ndims.insert(ndims.begin() + leg + 1, d2);
  Tensor out(f_, ndims);
  for (auto& [key, c] : ent_) {
    std::vector<int> nkey = key;
    nkey[leg] = key[leg] / d2;
    nkey.insert(nkey.begin() + leg + 1, key[leg] % d2);
    out.put(std::move(nkey), c);
  }
  return out;
}

Tensor Tensor::comult_at(int leg, const LinMap& comult) const {
  int d = dims_[leg];
  if (comult.dom() != d || comult.cod() != d * d)
    throw std::runtime_error("comult_at: shape mismatch");
  return apply(comult, {leg}, leg).split(leg, d, d);
}

Tensor Tensor::counit_at(int leg, const LinMap& counit) const {
  if (counit.cod() != 1) throw std::runtime_error("counit_at: not a functional");
  Tensor t = apply(counit, {leg}, leg);
  // drop the dim-1 leg
  std::vector<int> ndims = t.dims_;
  ndims.erase(ndims.begin() + leg);
  Tensor out(f_, ndims);
  for (auto& [key, c] : t.ent_) {
    std::vector<int> nkey = key;
    nkey.erase(nkey.begin() + leg);
    out.put(std::move(nkey), c);
  }
  return out;
}

Tensor Tensor::permute(const std::vector<int>& perm) const {
  std::vector<int> ndims(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) ndims[i] = dims_[perm[i]];
  Tensor out(f_, ndims);
  for (auto& [key, c] : ent_) {
    std::vector<int> nkey(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) nkey[i] = key[perm[i]];
    out.put(std::move(nkey), c);
  }
  return out;
}

Tensor Tensor::insert_vec(int pos, const Vec& v) const {
  std::vector<int> ndims = dims_;
  ndims.insert(ndims.begin() + pos, v.dim());
  Tensor out(f_, ndims);
  for (auto& [key, c] : ent_)
    for (auto& [i, d] : v.entries()) {
      std::vector<int> nkey = key;
      nkey.insert(nkey.begin() + pos, i);
      out.put(std::move(nkey), c * d);
    }
  return out;
}

Tensor Tensor::scaled(const Scalar& c) const {
  Tensor out(f_, dims_);
  if (c.is_zero()) return out;
  for (auto& [key, v] : ent_) out.ent_.emplace(key, v * c);
  return out;
}

Tensor Tensor::operator+(const Tensor& o) const {
  if (dims_ != o.dims_) throw std::runtime_error("tensor add: shape mismatch");
  Tensor out = *this;
  for (auto& [key, c] : o.ent_) out.put(key, c);
  return out;
}

Tensor Tensor::operator-(const Tensor& o) const {
  if (dims_ != o.dims_) throw std::runtime_error("tensor sub: shape mismatch");
  Tensor out = *this;
  for (auto& [key, c] : o.ent_) out.put(key, -c);
  return out;
}

bool Tensor::operator==(const Tensor& o) const { return dims_ == o.dims_ && ent_ == o.ent_; }

Vec Tensor::to_vec() const {
  long d = 1;
  for (int x : dims_) d *= x;
  Vec v(f_, (int)d);
  for (auto& [key, c] : ent_) {
    long idx = 0;
    for (size_t i = 0; i < key.size(); ++i) idx = idx * dims_[i] + key[i];
    v.set((int)idx, c);
  }
  return v;
}

}  // namespace hx
