#ifndef CYCLEBOUND_CYCLEBOUND_HPP
#define CYCLEBOUND_CYCLEBOUND_HPP

#include "cyclebound/bench.hpp"
#include "cyclebound/bounds.hpp"
#include "cyclebound/critical.hpp"
#include "cyclebound/cycle.hpp"
#include "cyclebound/digraph.hpp"
#include "cyclebound/enumeration.hpp"
#include "cyclebound/estimators.hpp"
#include "cyclebound/harness.hpp"
#include "cyclebound/howard.hpp"
#include "cyclebound/karp.hpp"
#include "cyclebound/rational.hpp"
#include "cyclebound/report.hpp"
#include "cyclebound/scc.hpp"
#include "cyclebound/transform.hpp"
#include "cyclebound/weightgen.hpp"

#endif  // CYCLEBOUND_CYCLEBOUND_HPP
