#pragma once

#include "raagbns/bns.hpp"
#include "raagbns/checks.hpp"
#include "raagbns/corpus.hpp"
#include "raagbns/error.hpp"
#include "raagbns/generators.hpp"
#include "raagbns/graph.hpp"
#include "raagbns/homology.hpp"
#include "raagbns/io.hpp"
#include "raagbns/linalg.hpp"
#include "raagbns/presentations.hpp"
#include "raagbns/raag_words.hpp"
