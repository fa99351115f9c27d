#pragma once

#include "neolex/error.hpp"
#include "neolex/gloss.hpp"
#include "neolex/ingest.hpp"
#include "neolex/ipa.hpp"
#include "neolex/phonology.hpp"
#include "neolex/phonotactics.hpp"
#include "neolex/pipeline.hpp"
#include "neolex/transcriber.hpp"
