#include "simplex/face_type.hpp"

#include <algorithm>
#include <sstream>

namespace simplex {

FaceType::FaceType(std::vector<double> weights) : weights_(std::move(weights)) {
  std::sort(weights_.begin(), weights_.end());
}

FaceType::FaceType(std::initializer_list<double> weights)
    : FaceType(std::vector<double>(weights)) {}

FaceType FaceType::replaced(std::size_t i, double w) const {
  std::vector<double> out = weights_;
  out.at(i) = w;
  return FaceType(std::move(out));
}

FaceType FaceType::dropped(std::size_t i) const {
  std::vector<double> out = weights_;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return FaceType(std::move(out));
}

FaceType FaceType::merged(double w) const {
  std::vector<double> out = weights_;
  out.push_back(w);
  return FaceType(std::move(out));
}

std::string FaceType::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) os << ", ";
    os << weights_[i];
  }
  os << ')';
  return os.str();
}

}  // namespace simplex
