#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "gaitdis/tensor.hpp"

namespace gaitdis {

/// Named parameter tensors plus persistent layer state (running statistics).
/// Names are unique; tensors whose name contains ".running_" are state, not
/// trainable weights.
class ModelParams {
 public:
  int add(const std::string& name, Tensor t) {
    require(index_.find(name) == index_.end(), "params: duplicate name " + name);
    const int id = static_cast<int>(tensors_.size());
    index_.emplace(name, id);
    names_.push_back(name);
    tensors_.push_back(std::move(t));
    return id;
  }

  int find(const std::string& name) const {
    auto it = index_.find(name);
    require(it != index_.end(), "params: unknown name " + name);
    return it->second;
  }
  bool contains(const std::string& name) const { return index_.count(name) != 0; }

  int count() const { return static_cast<int>(tensors_.size()); }
  const std::string& name(int id) const { return names_[static_cast<size_t>(id)]; }
  Tensor& tensor(int id) { return tensors_[static_cast<size_t>(id)]; }
  const Tensor& tensor(int id) const { return tensors_[static_cast<size_t>(id)]; }
  Tensor& tensor(const std::string& name) { return tensors_[static_cast<size_t>(find(name))]; }
  const Tensor& tensor(const std::string& name) const {
    return tensors_[static_cast<size_t>(find(name))];
  }

  bool trainable(int id) const {
    return names_[static_cast<size_t>(id)].find(".running_") == std::string::npos;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Tensor> tensors_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace gaitdis
