"""# descensus.commands.runs

Run plumbing shared by the commands: configuration resolution, output directories and the run
manifest written next to every set of artifacts.
"""

__all__ = ["RunManifest", "prepare_output", "read_manifest", "resolve_config", "write_json"]

from dataclasses        import dataclass, field, replace
from json               import dumps, JSONDecodeError, loads
from pathlib            import Path
from typing             import Any, Dict, Optional, Union

from harness            import ConfigurationError, load_config, TrialConfig
from utilities          import VERSION

@dataclass(frozen = True)
class RunManifest:
    """# Run Manifest.

    Everything needed to repeat a run: passing the manifest back as --config reuses its
    configuration snapshot (master seed included), and the recorded arguments fill in the
    command's remaining options. No timestamps or host details are recorded, so repeated runs write
    identical manifests.

    ## Attributes:
        * command       (str):              Command that produced the run.
        * master_seed   (int):              Seed of the trial, or master seed of the campaign.
        * config        (Dict[str, Any]):   Full configuration snapshot.
        * arguments     (Dict[str, Any]):   Command options that shape the artifacts.
        * artifacts     (Dict[str, str]):   Artifact name to path, relative to the manifest.
        * tool_version  (str):              Version of the tool.
    """
    command:        str
    master_seed:    int
    config:         Dict[str, Any]
    arguments:      Dict[str, Any] =    field(default_factory = dict)
    artifacts:      Dict[str, str] =    field(default_factory = dict)
    tool_version:   str =               VERSION

    def to_dict(self) -> Dict[str, Any]:
        """# JSON-Ready Manifest."""
        return  {
                    "tool_version": self.tool_version,
                    "command":      self.command,
                    "master_seed":  self.master_seed,
                    "arguments":    dict(self.arguments),
                    "artifacts":    dict(self.artifacts),
                    "config":       self.config
                }

    def write(self,
        directory:  Union[str, Path]
    ) -> Path:
        """# Write Manifest.

        ## Args:
            * directory (str | Path):   Output directory.

        ## Returns:
            * Path: Path of manifest.json.
        """
        return write_json(self.to_dict(), Path(directory) / "manifest.json")

def write_json(
    document:   Any,
    path:       Union[str, Path]
) -> Path:
    """# Write JSON Document (sorted keys, indent 2, trailing newline)."""
    path:   Path =  Path(path)
    path.write_text(dumps(document, indent = 2, sort_keys = True) + "\n", encoding = "utf-8")
    return path

def read_manifest(
    path:   Optional[Union[str, Path]]
) -> Optional[RunManifest]:
    """# Read Manifest.

    ## Args:
        * path  (str | Path, optional): Configuration or manifest file.

    ## Returns:
        * Optional[RunManifest]:    Manifest, or None when path is not a manifest.

    ## Raises:
        * ConfigurationError:   If the file cannot be read or parsed.
    """
    if path is None: return None

    try:                            document:   Any =   loads(Path(path).read_text(encoding = "utf-8"))
    except OSError as e:            raise ConfigurationError(f"Cannot read {path}: {e.strerror or e}") from e
    except JSONDecodeError as e:    raise ConfigurationError(f"{path} is not valid JSON: {e}") from e

    if not (isinstance(document, dict) and "tool_version" in document and "config" in document): return None

    return RunManifest(
        command =       document.get("command", ""),
        master_seed =   document.get("master_seed", 0),
        config =        document["config"],
        arguments =     document.get("arguments", {}),
        artifacts =     document.get("artifacts", {}),
        tool_version =  document["tool_version"]
    )

def resolve_config(
    config:     Optional[str] = None,
    seed:       Optional[int] = None,
    transport:  Optional[str] = None
) -> TrialConfig:
    """# Resolve Configuration.

    Load the configuration file (or manifest) and apply command-line overrides.

    ## Args:
        * config    (str, optional):    Configuration or manifest path. Defaults to all defaults.
        * seed      (int, optional):    Seed override.
        * transport (str, optional):    Transport kind override.

    ## Returns:
        * TrialConfig:  Configuration in effect.

    ## Raises:
        * ConfigurationError:   On unreadable or invalid configuration.
    """
    resolved:   TrialConfig =   load_config(config)

    if seed is not None:        resolved =  replace(resolved, seed = seed)
    if transport is not None:   resolved =  replace(resolved, transport = replace(resolved.transport, kind = transport))

    return resolved

def prepare_output(
    out:    Union[str, Path]
) -> Path:
    """# Create Output Directory."""
    path:   Path =  Path(out)
    path.mkdir(parents = True, exist_ok = True)
    return path
