#pragma once

#include "psi/plane.hpp"

namespace psi {

// One or three planes of equal size, samples nominally in [0,1].
struct Image {
    std::vector<Planed> planes;

    Image() = default;
    explicit Image(Planed p) { planes.push_back(std::move(p)); }
    Image(Planed r, Planed g, Planed b) {
        planes.push_back(std::move(r));
        planes.push_back(std::move(g));
        planes.push_back(std::move(b));
    }

    int channels() const { return static_cast<int>(planes.size()); }
    Eigen::Index height() const { return planes.empty() ? 0 : planes[0].rows(); }
    Eigen::Index width() const { return planes.empty() ? 0 : planes[0].cols(); }

    void validate() const {
        require(channels() == 1 || channels() == 3,
                "image must have 1 or 3 channels, got " + std::to_string(channels()));
        for (const auto& p : planes) {
            require(p.rows() == height() && p.cols() == width(), "image planes differ in size");
            require(p.rows() > 0 && p.cols() > 0, "image plane is empty");
            require(all_finite(p), "image contains non-finite samples");
        }
    }
};

// Splits an image into independently processable single-channel planes.
inline std::vector<Planed> split_channels(const Image& img) {
    img.validate();
    return img.planes;
}

inline Image merge_channels(std::vector<Planed> planes) {
    Image out;
    out.planes = std::move(planes);
    out.validate();
    return out;
}

}  // namespace psi
