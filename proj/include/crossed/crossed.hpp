// Umbrella header.

#ifndef CROSSED_CROSSED_HPP_
#define CROSSED_CROSSED_HPP_

#include "cocycle.hpp"
#include "crossed_system.hpp"
#include "cyclic_core.hpp"
#include "cyclicity.hpp"
#include "error.hpp"
#include "families.hpp"
#include "group_table.hpp"
#include "oracle.hpp"
#include "spec_format.hpp"

#endif // CROSSED_CROSSED_HPP_
