// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "framealias/filterbank.hpp"

namespace framealias {

/// A strided convolutional layer with C input channels and M output channels;
/// kernels[i][j] maps input channel i to output channel j. The analysis
/// operator sends (x_1,...,x_C) to (sum_i (x_i * w_{i,j}) downsampled)_j.
struct MultiChannelFilterbank {
    std::vector<std::vector<ComplexVector>> kernels;  // C x M x L_K
    int stride = 1;
    int signal_length = 0;

    int input_channels() const { return static_cast<int>(kernels.size()); }
    int output_channels() const {
        return kernels.empty() ? 0 : static_cast<int>(kernels.front().size());
    }
    int kernel_size() const {
        return output_channels() == 0 ? 0 : static_cast<int>(kernels.front().front().size());
    }
};

/// Sample-interlaces the C input channels into one signal of length C L.
/// The resulting single-channel filterbank (kernels w_j[nC + i] = w_{i,j}[n],
/// stride C d, kernel size C L_K) has exactly the frame bounds of the
/// multi-channel layer; interlacing is unitary.
Filterbank interlace_multichannel(const MultiChannelFilterbank& mc);

/// Interlaces a multi-channel input tuple the same way the filters are
/// interlaced.
Signal interlace_signals(const std::vector<Signal>& channels);

/// Companion filterbank whose frame operator is the Gram matrix Theta Theta*
/// of the interlaced filterbank: C d filters of length M L / d with stride M,
///   v_q[n M + k] = conj(w_k[n C d + q]).
/// Applicable when the analysis operator maps into a strictly smaller space,
/// i.e. C > M / d; its optimal bounds are the extreme nonzero eigenvalues of
/// the original frame operator.
Filterbank gram_dual(const Filterbank& interlaced, int input_channels);

/// Channel-specific strides d_j. Requires every d_j (and their lcm) to divide
/// the signal length.
struct NonUniformFilterbank {
    std::vector<ComplexVector> kernels;  // M x L_K
    std::vector<int> strides;            // d_1..d_M
    int signal_length = 0;
};

/// Replaces channel j by lcm/d_j shifted copies T_{n d_j} w_j running at the
/// common stride lcm(d_1..d_M). Energy in the coefficients is preserved
/// term-by-term, so the frame bounds match the non-uniform system. The
/// returned kernels carry the shifts, so the support annotation widens to
/// L_K + max shift.
Filterbank uniformize_nonuniform(const NonUniformFilterbank& nfb);

/// Dilated convolution (x *_a w)[n] = sum_l x[n - a l] w[l] equals plain
/// convolution with the kernel upsampled by a and cropped to the signal
/// length; requires a L_K <= L so that only zeros are cropped.
Filterbank dilate(const Filterbank& fb, int factor);

/// Direct evaluation of the defining sum above, decimated by `stride`.
ComplexVector dilated_strided_convolve(const Signal& x, const ComplexVector& kernel, int factor,
                                       int stride);

/// Ideal band-pass prototypes: response_j[k] = 1 on [a j, a j + L/d - 1]
/// (cyclically), 0 elsewhere.
struct BandpassBank {
    std::vector<std::vector<double>> responses;  // M x L, 0/1 valued
    int hop = 0;  // a
    int stride = 1;
    int length = 0;
};

BandpassBank ideal_bandpass(int channels, int stride, int length, int hop);

/// Time-domain band-pass filters (non-unitary inverse DFT of the responses).
std::vector<Signal> bandpass_filters(const BandpassBank& bank);

/// Hybrid filterbank psi_j * w_j: trainable kernels pre-filtered by the fixed
/// band-pass prototypes. With hop = L/d the band supports are disjoint under
/// the L/d translations, so all aliasing terms with n >= 1 vanish identically
/// (the painless case).
Filterbank hybrid(const BandpassBank& bank, const Filterbank& fb);

struct PainlessReport {
    bool is_painless = false;
    bool frame = false;
    bool tight = false;
    double max_alias = 0.0;      // max_{n>=1} ||G_n||_inf
    double min_response = 0.0;   // min G_0
    double max_response = 0.0;   // max G_0
};

/// Painless = S_hat diagonal (all aliasing terms beyond G_0 vanish); then
/// frame iff min G_0 > 0 and tight iff G_0 is constant, both within tol
/// relative to max G_0.
PainlessReport painless_report(const Filterbank& fb, double tol = 1e-10);

}  // namespace framealias
