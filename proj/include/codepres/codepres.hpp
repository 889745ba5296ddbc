#pragma once

#include "codepres/bitword.hpp"
#include "codepres/codemodel.hpp"
#include "codepres/ctf.hpp"
#include "codepres/error.hpp"
#include "codepres/presentation.hpp"
#include "codepres/render.hpp"
