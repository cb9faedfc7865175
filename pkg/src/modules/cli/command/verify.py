from typing import Optional

from ...verify.context import SuiteContext
from ...verify.report import create_report_sink, publish
from ...verify.suite import estimate_suite
from ...verify.summary import render_summary
from ..errors import ConfigError
from .base import BaseCommand


class VerifyCommand(BaseCommand):
    """Run the acceptance battery and publish its report to the configured sinks."""
    name = "verify"

    def execute(self) -> Optional[str]:
        settings = self.config.verify
        ctx = self.upstream(
            "verify", SuiteContext.build, self.model, self.grid, self.lattice,
            jost=self.config.jost_settings(),
            eigen=self.config.eigen_settings(),
            store=self.table_store(),
            threads=self.threads,
            logger=self.logger,
            step=self.config.step_settings(),
            decomposition=self.config.decomposition_settings(self.threads),
            bank_size=settings.bank_size,
        )
        seeds = (self.seed,) if self.seed is not None else tuple(settings.seeds)
        try:
            report = estimate_suite(ctx, seeds, settings.checks, self.threads)
        except ValueError as e:
            raise ConfigError(str(e))

        target = self.out_dir / "verify"
        sinks = [
            create_report_sink(sink, target, self.logger, self.config.output.job_name)
            for sink in self.config.output.sinks
        ]
        publish(report, sinks)
        for path in sorted(target.glob("report.*")):
            self.manifest.add(path, "report")
        summary = self.output_path("verify/summary.md")
        summary.write_text(render_summary(report))
        self.manifest.add(summary, "report")

        failure = report.first_failure
        return failure.check_id if failure else None
