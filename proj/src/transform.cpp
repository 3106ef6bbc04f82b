#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "covelm/error.hpp"
#include "covelm/features.hpp"

namespace covelm {

namespace {

using cplx = std::complex<double>;

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

int next_pow2(int n) {
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

// Iterative radix-2 Cooley-Tukey, forward sign convention e^{-2pi i jk/n}.
void fft_pow2(cplx* x, int n, bool inverse) {
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j |= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / len;
        const cplx wlen(std::cos(ang), std::sin(ang));
        for (int i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (int k = 0; k < len / 2; ++k) {
                const cplx u = x[i + k];
                const cplx v = x[i + k + len / 2] * w;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / n;
        for (int i = 0; i < n; ++i) x[i] *= inv;
    }
}

// Bluestein's algorithm for arbitrary lengths, via a power-of-two convolution.
void fft_bluestein(cplx* x, int n) {
    const int m = next_pow2(2 * n - 1);
    std::vector<cplx> a(m, cplx(0.0, 0.0)), b(m, cplx(0.0, 0.0));
    std::vector<cplx> chirp(n);
    for (int k = 0; k < n; ++k) {
        // k^2 mod 2n keeps the phase argument small and exact.
        const std::int64_t k2 = (std::int64_t(k) * k) % (2 * std::int64_t(n));
        const double ang = std::numbers::pi * double(k2) / n;
        chirp[k] = cplx(std::cos(ang), -std::sin(ang));
    }
    for (int k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
    b[0] = cplx(1.0, 0.0);
    for (int k = 1; k < n; ++k) b[k] = b[m - k] = std::conj(chirp[k]);

    fft_pow2(a.data(), m, false);
    fft_pow2(b.data(), m, false);
    for (int i = 0; i < m; ++i) a[i] *= b[i];
    fft_pow2(a.data(), m, true);

    for (int k = 0; k < n; ++k) x[k] = a[k] * chirp[k];
}

void fft_1d(cplx* x, int n) {
    if (n == 1) return;
    if (is_pow2(n))
        fft_pow2(x, n, false);
    else
        fft_bluestein(x, n);
}

// Full 2D DFT: rows, then columns. Each 1D transform is independent.
std::vector<cplx> fft_2d(const GrayImage& img) {
    const int h = img.height, w = img.width;
    std::vector<cplx> f(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) f[i] = cplx(img.pixels[i], 0.0);

#pragma omp parallel for schedule(static)
    for (int r = 0; r < h; ++r) fft_1d(&f[std::size_t(r) * w], w);

#pragma omp parallel for schedule(static)
    for (int c = 0; c < w; ++c) {
        std::vector<cplx> col(h);
        for (int r = 0; r < h; ++r) col[r] = f[std::size_t(r) * w + c];
        fft_1d(col.data(), h);
        for (int r = 0; r < h; ++r) f[std::size_t(r) * w + c] = col[r];
    }
    return f;
}

}  // namespace

Matrix fft_magnitude(const GrayImage& img, bool log_scale) {
    if (img.empty()) throw InvalidInput("fft_magnitude: empty image");
    const int h = img.height, w = img.width;
    const auto f = fft_2d(img);

    Matrix out(h, w);
    const int sy = h - h / 2, sx = w - w / 2;  // shift placing DC at (h/2, w/2)
#pragma omp parallel for schedule(static)
    for (int r = 0; r < h; ++r) {
        const int src_r = (r + sy) % h;
        for (int c = 0; c < w; ++c) {
            const int src_c = (c + sx) % w;
            const double mag = std::abs(f[std::size_t(src_r) * w + src_c]);
            out(r, c) = log_scale ? std::log1p(mag) : mag;
        }
    }
    return out;
}

Matrix haar_dwt2d(const Matrix& img, int levels) {
    if (img.empty()) throw InvalidInput("haar_dwt2d: empty input");
    if (levels < 1) throw InvalidInput("haar_dwt2d: levels must be positive");
    const int div = 1 << levels;
    if (img.rows % div != 0 || img.cols % div != 0)
        throw InvalidInput("haar_dwt2d: dimensions must be divisible by 2^levels");

    constexpr double kInvSqrt2 = 0.70710678118654752440;
    Matrix work = img;
    for (int lvl = 0; lvl < levels; ++lvl) {
        const int r = img.rows >> lvl;
        const int c = img.cols >> lvl;

#pragma omp parallel for schedule(static)
        for (int i = 0; i < r; ++i) {
            std::vector<double> row(c);
            for (int j = 0; j < c / 2; ++j) {
                const double a = work(i, 2 * j), b = work(i, 2 * j + 1);
                row[j] = (a + b) * kInvSqrt2;
                row[c / 2 + j] = (a - b) * kInvSqrt2;
            }
            for (int j = 0; j < c; ++j) work(i, j) = row[j];
        }

#pragma omp parallel for schedule(static)
        for (int j = 0; j < c; ++j) {
            std::vector<double> col(r);
            for (int i = 0; i < r / 2; ++i) {
                const double a = work(2 * i, j), b = work(2 * i + 1, j);
                col[i] = (a + b) * kInvSqrt2;
                col[r / 2 + i] = (a - b) * kInvSqrt2;
            }
            for (int i = 0; i < r; ++i) work(i, j) = col[i];
        }
    }
    return work;
}

Matrix dwt_ll3(const GrayImage& img) {
    if (img.empty()) throw InvalidInput("dwt_ll3: empty image");
    if (img.height % 8 != 0 || img.width % 8 != 0)
        throw InvalidInput("dwt_ll3: dimensions must be divisible by 8");

    Matrix m(img.height, img.width);
    m.data = img.pixels;
    const Matrix full = haar_dwt2d(m, 3);

    Matrix ll(img.height / 8, img.width / 8);
    for (int r = 0; r < ll.rows; ++r)
        for (int c = 0; c < ll.cols; ++c) ll(r, c) = full(r, c);
    return ll;
}

}  // namespace covelm
