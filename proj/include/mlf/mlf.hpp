#pragma once

// Umbrella header: complex Mittag-Leffler evaluation with error estimates,
// derivatives and Taylor jets, real/complex zero location and counting,
// modulus inequalities on the plane, monotonicity probes, and the boundary
// curve h(alpha) of the log-convexity transition.

#include "mlf/params.hpp"
#include "mlf/gamma.hpp"
#include "mlf/series.hpp"
#include "mlf/asymptotic.hpp"
#include "mlf/closed_form.hpp"
#include "mlf/eval.hpp"
#include "mlf/derivatives.hpp"
#include "mlf/hfun.hpp"
#include "mlf/zeros.hpp"
#include "mlf/inequal.hpp"
#include "mlf/cm.hpp"
#include "mlf/threading.hpp"
