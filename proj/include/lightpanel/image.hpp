#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lightpanel {

/// Row-major grayscale image. Pixels are real-valued; quantized images hold
/// integers in [0, 255].
class GrayImage {
  public:
    GrayImage() = default;
    GrayImage(int width, int height, double fill = 0.0)
        : width_(width), height_(height),
          pixels_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {
        if (width <= 0 || height <= 0)
            throw std::invalid_argument("GrayImage: dimensions must be positive");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return pixels_.size(); }

    double& at(int x, int y) { return pixels_[idx(x, y)]; }
    double at(int x, int y) const { return pixels_[idx(x, y)]; }

    std::vector<double>& pixels() { return pixels_; }
    const std::vector<double>& pixels() const { return pixels_; }

    bool same_size(const GrayImage& o) const {
        return width_ == o.width_ && height_ == o.height_;
    }

  private:
    std::size_t idx(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<double> pixels_;
};

} // namespace lightpanel
