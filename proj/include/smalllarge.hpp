#pragma once

#include <smalllarge/bounds.hpp>
#include <smalllarge/checker.hpp>
#include <smalllarge/errors.hpp>
#include <smalllarge/exact.hpp>
#include <smalllarge/generators.hpp>
#include <smalllarge/graph.hpp>
#include <smalllarge/invariants.hpp>
#include <smalllarge/io.hpp>
#include <smalllarge/oracles.hpp>
#include <smalllarge/report.hpp>
#include <smalllarge/seq_partition.hpp>
#include <smalllarge/serialize.hpp>
#include <smalllarge/sets.hpp>
