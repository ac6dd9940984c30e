# Copyright 2026 The GUTEK Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os
import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


def pytest_addoption(parser):
    parser.addoption("--gutek", required=True, help="Path to the gutek binary")
    parser.addoption("--stub-adapter", required=True, help="Path to the protocol stub adapter")


@pytest.fixture(scope="session")
def gutek(request):
    return request.config.getoption("--gutek")


@pytest.fixture(scope="session")
def stub_adapter(request):
    return request.config.getoption("--stub-adapter")


@pytest.fixture(scope="session")
def root():
    return ROOT


@pytest.fixture(scope="session")
def synth_dir(gutek, tmp_path_factory):
    import subprocess

    out = tmp_path_factory.mktemp("synth")
    subprocess.run([gutek, "synth", "--out-dir", str(out), "--pairs", "100", "--examples", "20",
                    "--long-texts", "8"], check=True, env=_env())
    return out


def _env():
    env = dict(os.environ)
    env.pop("GUTEK_CACHE_DIR", None)
    return env
