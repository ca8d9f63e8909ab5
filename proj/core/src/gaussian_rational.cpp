#include "ringinv/gaussian_rational.hpp"

#include <stdexcept>
#include <utility>

namespace ringinv {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::reciprocal() const {
    if (is_zero()) {
        throw std::domain_error("reciprocal of zero");
    }
    mpq_class n = norm();
    return {mpq_class(re_ / n), mpq_class(-im_ / n)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string GaussianRational::to_string() const {
    const bool has_re = sgn(re_) != 0;
    const bool has_im = sgn(im_) != 0;
    if (!has_im) {
        return re_.get_str();
    }
    std::string im_part;
    if (im_ == 1) {
        im_part = "i";
    } else if (im_ == -1) {
        im_part = "-i";
    } else {
        im_part = im_.get_str() + "i";
    }
    if (!has_re) {
        return im_part;
    }
    std::string out = re_.get_str();
    if (sgn(im_) > 0) {
        out += '+';
    }
    return out + im_part;
}

}  // namespace ringinv
