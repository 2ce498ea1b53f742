#pragma once

#include "berge/blocks.hpp"
#include "berge/extremal.hpp"
#include "berge/hypergraph.hpp"
#include "berge/injections.hpp"
#include "berge/json_io.hpp"
#include "berge/lemma_paths.hpp"
#include "berge/oracle.hpp"
#include "berge/search.hpp"
