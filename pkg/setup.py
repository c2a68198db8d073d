#!/usr/bin/env python3
"""
gca-verify - Setup Script
=========================

This script automates the setup process for the Galilean conformal module
verifier. It creates a virtual environment, installs the dependencies and
runs a quick self-check so the command line is ready to use.

Usage:
    python setup.py

Features:
- Creates isolated Python virtual environment
- Installs all required dependencies
- Reports the configured GCA_* settings
- Runs a determinant and a closure self-check
- Provides helpful next steps

Version: 1.0.0
License: MIT
"""

import os
import platform
import subprocess
import sys
import venv
from pathlib import Path

ENV_DIR = Path("gca_env")
SETTING_NAMES = (
    "GCA_ITERATION_CAP", "GCA_RANDOM_SEED", "GCA_TENSOR_RANDOM_SEEDS",
    "GCA_ISO_DEGREE", "GCA_ISO_RANGE", "GCA_LOG_LEVEL",
)


def print_header():
    """Print a welcome header for the setup process."""
    print("=" * 60)
    print("🧮 gca-verify - Setup Script")
    print("=" * 60)
    print("This script will set up an environment for the Galilean")
    print("conformal module verifier.")
    print()


def check_python_version():
    """Check if Python version is compatible."""
    print("🐍 Checking Python version...")

    version = sys.version_info
    if version < (3, 9):
        print("❌ Error: Python 3.9 or higher is required.")
        print(f"   Current version: {version.major}.{version.minor}.{version.micro}")
        return False

    print(f"✅ Python {version.major}.{version.minor}.{version.micro} is compatible")
    return True


def create_virtual_environment():
    """Create a virtual environment for the project."""
    print("\n📦 Creating virtual environment...")

    if ENV_DIR.exists():
        print("⚠️  Virtual environment already exists. Skipping creation.")
        return True

    try:
        venv.create(ENV_DIR, with_pip=True)
        print("✅ Virtual environment created successfully")
        return True
    except Exception as e:
        print(f"❌ Error creating virtual environment: {e}")
        return False


def env_executable(name):
    """Path of an executable inside the virtual environment."""
    if platform.system() == "Windows":
        return str(ENV_DIR / "Scripts" / name)
    return str(ENV_DIR / "bin" / name)


def get_activation_command():
    """Get the correct activation command for the current platform."""
    if platform.system() == "Windows":
        return f"{ENV_DIR}\\Scripts\\activate"
    return f"source {ENV_DIR}/bin/activate"


def install_dependencies():
    """Install required Python packages."""
    print("\n📚 Installing dependencies...")

    try:
        subprocess.run([env_executable("pip"), "install", "-r", "requirements.txt"], check=True)
        print("✅ Dependencies installed successfully")
        return True
    except subprocess.CalledProcessError as e:
        print(f"❌ Error installing dependencies: {e}")
        return False


def show_settings():
    """List the GCA_* settings found in the environment or .env."""
    print("\n⚙️  Checking settings...")

    found = [name for name in SETTING_NAMES if os.getenv(name)]
    if Path(".env").exists():
        print("✅ Found .env file")
    if not found:
        print("   No GCA_* variables set; defaults will be used.")
    for name in found:
        print(f"   {name}={os.getenv(name)}")


def run_self_check():
    """Run two small checks inside the virtual environment."""
    print("\n🧪 Running self-check...")

    script = (
        "from analysis import ONE_TENSOR, vandermonde_obstruction\n"
        "from closure import generate\n"
        "from freemod import ModuleSpec\n"
        "from tensormod import TensorSpec\n"
        "assert vandermonde_obstruction(1, 2, 3, 4).det == 12\n"
        "ts = TensorSpec(ModuleSpec.type_i(2, 0, 1), ModuleSpec.type_ii(3, 0, 1))\n"
        "assert generate(ts, [ONE_TENSOR], 3, 3).weight_profile(2)[-1] == 15\n"
    )
    try:
        subprocess.run([env_executable("python"), "-c", script], check=True, cwd=str(Path.cwd()))
        print("✅ Determinant check passed")
        print("✅ Closure check passed")
        return True
    except subprocess.CalledProcessError as e:
        print(f"❌ Error during self-check: {e}")
        return False


def print_next_steps():
    """Print instructions for next steps."""
    print("\n" + "=" * 60)
    print("🎉 Setup Complete!")
    print("=" * 60)
    print()
    print("Next steps:")
    print("1. Activate the virtual environment:")
    print(f"   {get_activation_command()}")
    print()
    print("2. Try a few checks:")
    print("   python cli.py vandermonde --vals 1,2,3,4")
    print("   python cli.py rank-one --family TypeI --lam 2 --sigma X")
    print('   python cli.py classify --A "mixed:2,0,1;3,0,1" --B "mixed:2,1,1;3,0,1"')
    print()
    print("3. Run the tests:")
    print('   pytest -m "not slow"')
    print()
    print("For more information, see README.md")
    print("=" * 60)


def main():
    """Main setup function."""
    print_header()

    if not check_python_version():
        sys.exit(1)

    if not create_virtual_environment():
        sys.exit(1)

    if not install_dependencies():
        sys.exit(1)

    show_settings()

    if not run_self_check():
        print("⚠️  The self-check failed, but the install may still work.")
        print("   Run pytest for details.")

    print_next_steps()


if __name__ == "__main__":
    main()
