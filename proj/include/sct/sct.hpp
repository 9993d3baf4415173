#pragma once

// Size-change termination analysis.

#include "sct/errors.hpp"
#include "sct/graph.hpp"
#include "sct/closure.hpp"
#include "sct/criterion.hpp"
#include "sct/graph_json.hpp"
#include "sct/ast.hpp"
#include "sct/parser.hpp"
#include "sct/printer.hpp"
#include "sct/call_sites.hpp"
#include "sct/interpreter.hpp"
#include "sct/extract.hpp"
#include "sct/safety.hpp"
#include "sct/synth.hpp"
#include "sct/oracle.hpp"
#include "sct/principles.hpp"
#include "sct/fixtures.hpp"
