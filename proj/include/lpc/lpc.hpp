#pragma once

#include "lpc/certificates.hpp"
#include "lpc/errors.hpp"
#include "lpc/interval.hpp"
#include "lpc/membership.hpp"
#include "lpc/param_scan.hpp"
#include "lpc/partial_theta.hpp"
#include "lpc/quotient.hpp"
#include "lpc/rational.hpp"
#include "lpc/realroot.hpp"
#include "lpc/search.hpp"
#include "lpc/sequences.hpp"
#include "lpc/series.hpp"
#include "lpc/verdict.hpp"
