#pragma once

#include "bondage.hpp"
#include "campaign.hpp"
#include "configurations.hpp"
#include "corpus.hpp"
#include "discharging.hpp"
#include "domination.hpp"
#include "embedding.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "isomorphism.hpp"
#include "matching.hpp"
#include "planarity.hpp"
#include "witness.hpp"
