#ifndef NPANNULUS_NPANNULUS_HPP
#define NPANNULUS_NPANNULUS_HPP

#include "npannulus/errors.hpp"
#include "npannulus/geometry.hpp"
#include "npannulus/gershgorin.hpp"
#include "npannulus/grunsky.hpp"
#include "npannulus/map_file.hpp"
#include "npannulus/np_assembly.hpp"
#include "npannulus/nystrom.hpp"
#include "npannulus/report.hpp"
#include "npannulus/spectral.hpp"

#endif  // NPANNULUS_NPANNULUS_HPP
