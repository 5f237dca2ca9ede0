#ifndef FFD_KERNEL_MATH_HPP
#define FFD_KERNEL_MATH_HPP

namespace ffd {

/// Width and blurring ratio of a difference-of-Gaussians kernel
/// D(x,y) = G_{mu*sigma}(x,y) - G_sigma(x,y).
struct KernelSpec
{
    double sigma;  // width of the narrower Gaussian, pixels
    double mu;     // ratio of the two Gaussian widths, > 1

    KernelSpec(double sigma_, double mu_);
};

/// Outcome of the edge-superimposition constraint check.
struct ConstraintResult
{
    double margin;    // constraint left side minus 1/sqrt(2); <= 0 means ok
    bool satisfied;   // margin <= 0
    double omega_d;   // excitatory width of the checked kernel, pixels
};

/// 2D Gaussian of width sigma, unit mass.
double gaussian2d(double x, double y, double sigma);

/// Scale-normalized Laplacian of Gaussian; zero ring at radius sqrt(2)*sigma.
double log_normalized(double x, double y, double sigma);

/// Difference of Gaussians G_{mu*sigma} - G_sigma.
double dog(double x, double y, const KernelSpec& spec);

/// Distance between the two zero crossings of the LoG central lobe: 2*sqrt(2)*sigma_l.
double excitatory_width_log(double sigma_l);

/// Distance between the two zero crossings of the DoG central lobe.
double excitatory_width_dog(const KernelSpec& spec);

/// LoG width at which the given DoG is exactly scale-normalized.
double sigma_log_equivalent(const KernelSpec& spec);

/// Peak ratio between the scale-normalized LoG and the matched DoG: 1/ln(mu).
double eta(double mu);

/// Displacement of a zero crossing when two edges sit d apart inside an
/// excitatory region of width omega_d. Zero once d >= omega_d.
double zero_crossing_error(double omega_d, double d);

/// Checks the superimposition constraint for sigma = lambda * mu.
ConstraintResult superimposition_check(double lambda, double mu);

/// The lambda that turns the superimposition constraint into an equality,
/// found by bisection to |margin| < 1e-10.
double solve_golden_lambda(double mu);

/// Half-power (-3 dB) bandwidth of the 1D DoG spectrum, measured from a
/// 4096-sample profile over +-16*mu*sigma via DFT magnitude and linear
/// interpolation of the crossing points. Angular frequency units.
double dog_halfpower_bandwidth(const KernelSpec& spec);

}  // namespace ffd

#endif
