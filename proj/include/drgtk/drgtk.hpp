#pragma once

#include "drgtk/coclique.hpp"
#include "drgtk/constructions.hpp"
#include "drgtk/distance.hpp"
#include "drgtk/feasibility.hpp"
#include "drgtk/graph.hpp"
#include "drgtk/io.hpp"
#include "drgtk/isomorphism.hpp"
#include "drgtk/koolen_park.hpp"
#include "drgtk/regularity.hpp"
#include "drgtk/report.hpp"
#include "drgtk/terwilliger.hpp"
#include "drgtk/verify.hpp"
