#pragma once

#include "schubert/cartan.hpp"
#include "schubert/errors.hpp"
#include "schubert/galleries.hpp"
#include "schubert/kl.hpp"
#include "schubert/root_system.hpp"
#include "schubert/smoothness.hpp"
#include "schubert/tangent.hpp"
#include "schubert/weyl.hpp"
