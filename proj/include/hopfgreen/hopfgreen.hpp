#pragma once

#include <hopfgreen/cyclotomic.hpp>
#include <hopfgreen/qcombinatorics.hpp>
#include <hopfgreen/group.hpp>
#include <hopfgreen/character.hpp>
#include <hopfgreen/hopf.hpp>
#include <hopfgreen/labels.hpp>
#include <hopfgreen/matrix.hpp>
#include <hopfgreen/matrixrep.hpp>
#include <hopfgreen/tensor_rules.hpp>
#include <hopfgreen/oracle.hpp>
#include <hopfgreen/green_ring.hpp>
#include <hopfgreen/green_suite.hpp>
#include <hopfgreen/selftest.hpp>
#include <hopfgreen/expr.hpp>
#include <hopfgreen/textio.hpp>
