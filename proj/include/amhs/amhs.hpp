#pragma once

#include "amhs/residue.hpp"
#include "amhs/bigrational.hpp"
#include "amhs/padic.hpp"
#include "amhs/rational_poly.hpp"
#include "amhs/primes.hpp"
#include "amhs/mhs.hpp"
#include "amhs/bernoulli.hpp"
#include "amhs/identities.hpp"
#include "amhs/contexts.hpp"
#include "amhs/registry.hpp"
#include "amhs/suite.hpp"
#include "amhs/report.hpp"
#include "amhs/verify.hpp"
